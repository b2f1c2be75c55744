/* strongequiv - decision procedures for strong equivalence of finite graphs.
 *
 * Two graphs are strongly equivalent under a property when every common
 * extension leaves them on the same side of the property. This C API wraps
 * the C++ core behind opaque handles; every function returns a status code,
 * with details available from se_last_error(). Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * se_free_string().
 *
 * Graph text format: one edge per line as "u v" (labels separated by
 * spaces), "#" starts a comment line, blank lines ignored. Canonical output
 * sorts endpoints within a line and lines lexicographically.
 */

#ifndef STRONGEQUIV_H
#define STRONGEQUIV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct se_graph se_graph;
typedef struct se_property se_property;

typedef enum se_status {
  SE_OK = 0,
  SE_ERR_PARSE = 1,            /* malformed graph or family text */
  SE_ERR_INVALID_ARGUMENT = 2, /* bad parameter, degenerate input */
  SE_ERR_TOO_LARGE = 3,        /* beyond the supported desk scale */
  SE_ERR_UNSUPPORTED = 4,      /* pattern class without a characterization */
  SE_ERR_NO_WITNESS = 5,       /* internal defect: construction failed */
  SE_ERR_INTERNAL = 6
} se_status;

typedef enum se_verdict {
  SE_VERDICT_EQUIVALENT = 0,
  SE_VERDICT_NOT_EQUIVALENT = 1,
  SE_VERDICT_UNKNOWN = 2
} se_verdict;

typedef enum se_side { SE_SIDE_FIRST = 1, SE_SIDE_SECOND = 2 } se_side;

typedef enum se_oracle_outcome {
  SE_ORACLE_SEPARATED = 0,
  SE_ORACLE_EXHAUSTED = 1,
  SE_ORACLE_BUDGET = 2
} se_oracle_outcome;

/* Bounded-search caps. fresh_count < 0 selects the per-property default;
 * max_edges 0 means "all edges of the complete graph on the pool";
 * max_candidates 0 means the built-in cap. */
typedef struct se_budget {
  int32_t fresh_count;
  uint64_t max_edges;
  uint64_t max_candidates;
} se_budget;

const char* se_version(void);

/* Message for the most recent failure on this thread. */
const char* se_last_error(void);
void se_free_string(char* s);

/* --- graphs -------------------------------------------------------------- */
se_status se_graph_parse(const char* text, se_graph** out);
se_status se_graph_serialize(const se_graph* g, char** out_text);
se_status se_graph_union(const se_graph* g, const se_graph* h, se_graph** out);
int se_graph_equal(const se_graph* g, const se_graph* h);
int64_t se_graph_edge_count(const se_graph* g);
int64_t se_graph_vertex_count(const se_graph* g);
void se_graph_free(se_graph* g);

/* --- property selectors --------------------------------------------------
 * Specs: "ham", "planar", "edge2color", "kcolor:<k>", "kconn:<k>",
 * "kconn-psi:<k>". Subgraph-containment properties take their pattern as a
 * graph handle. */
se_status se_property_parse(const char* spec, se_property** out);
se_status se_property_subgraph(const se_graph* pattern, se_property** out);
void se_property_free(se_property* p);

/* --- decision ------------------------------------------------------------ */
/* reason_out (optional) carries the explanation for SE_VERDICT_UNKNOWN. */
se_status se_decide(const se_property* p, const se_graph* g, const se_graph* h,
                    se_verdict* verdict, char** reason_out);

/* Builds a separating extension for a pair the decider rejects. Fails with
 * SE_ERR_INVALID_ARGUMENT when the pair is equivalent and with
 * SE_ERR_UNSUPPORTED when the verdict is unknown. */
se_status se_witness(const se_property* p, const se_graph* g, const se_graph* h,
                     se_graph** f_out, se_side* side_out, char** construction_out);

se_status se_verify_witness(const se_property* p, const se_graph* g, const se_graph* h,
                            const se_graph* f, int* ok_out);

/* --- bounded refutation oracle ------------------------------------------- */
se_status se_budget_default(const se_property* p, const se_graph* g, const se_graph* h,
                            se_budget* out);

/* Searches extensions over the input vertices plus fresh ones for one that
 * separates the pair; f_out is set when the outcome is SEPARATED. */
se_status se_refute_bounded(const se_property* p, const se_graph* g, const se_graph* h,
                            se_budget budget, se_oracle_outcome* outcome,
                            se_graph** f_out);

/* Checks every pair from the instance family: NotEquivalent verdicts must
 * come with a verifying witness, Equivalent verdicts with oracle
 * exhaustion. sample_pairs 0 means exhaustive over all unordered pairs of
 * graphs on `vertices` labels. */
se_status se_crosscheck(const se_property* p, int vertices, uint64_t sample_pairs,
                        uint64_t seed, se_budget budget, int as_json, char** report_out,
                        int64_t* violations_out);

/* (K, K-e) separation for each complete graph on 2..max_vertices vertices. */
se_status se_complete_graph_criterion(const se_property* p, int max_vertices,
                                      se_budget budget, int as_json, char** report_out,
                                      int* all_separated_out);

/* --- constructions -------------------------------------------------------- */
/* Builds (G, H) such that gprime is k-colorable iff deciding the pair under
 * kcolor:<k> yields NOT_EQUIVALENT. Requires k >= 3. */
se_status se_reduce_kcolor(const se_graph* gprime, int k, se_graph** g_out,
                           se_graph** h_out);

/* Smallest subgraph of g equivalent to g under kconn:<k>; budget caps the
 * number of edge subsets examined. budget_exceeded_out is set to 1 and
 * *out to NULL when the cap is hit first. */
se_status se_min_equivalent_subgraph(const se_graph* g, int k, uint64_t budget,
                                     se_graph** out, int* budget_exceeded_out);

/* --- finite set micro-model ------------------------------------------------
 * family_text: first line lists the universe elements; each following line
 * lists one member subset as space-separated elements, "-" for the empty
 * set. The report classifies the property's threshold form and checks it
 * against the strengthening fixpoint computed by brute force;
 * agreement_out is 1 when the two agree. */
se_status se_setcheck(const char* family_text, int as_json, char** report_out,
                      int* agreement_out);

#ifdef __cplusplus
}
#endif

#endif /* STRONGEQUIV_H */
