#include <math.h>
#include <stdio.h>
#include <string.h>

#include "logpoly.h"

#define CHECK(cond)                                               \
    do {                                                          \
        if (!(cond)) {                                            \
            fprintf(stderr, "check failed at line %d: %s\n",      \
                    __LINE__, #cond);                             \
            return 1;                                             \
        }                                                         \
    } while (0)

int main(void) {
    const char *spec =
        "{\"log_G\": {\"a\": [[0,0],[1,0]], \"b\": [[0,0],[0.4,0]]},"
        " \"lambda\": [[0,0],[1,0]]}";
    LpMapping *m = NULL;
    CHECK(lp_mapping_from_json(spec, &m) == LP_STATUS_OK);

    size_t p = 0;
    CHECK(lp_mapping_order(m, &p) == LP_STATUS_OK && p == 2);

    double direct = 0.0, closed = 0.0;
    CHECK(lp_jacobian_direct(m, 0.3, -0.2, &direct) == LP_STATUS_OK);
    CHECK(lp_jacobian_closed(m, 0.3, -0.2, &closed) == LP_STATUS_OK);
    CHECK(fabs(direct - closed) <= 1e-12 * fabs(direct));

    double ind = 0.0;
    CHECK(lp_indicator(m, LP_TARGET_LOG_F, LP_INDICATOR_CONVEX, 0.0, 0.5, &ind) == LP_STATUS_OK);
    /* (1 - 0.16) / |e^{i pi} - 0.4|^2 */
    CHECK(fabs(ind - 0.84 / 1.96) < 1e-12);

    LpComplex v;
    CHECK(lp_eval(m, LP_TARGET_LOG_G, 1.5, 0.0, &v) == LP_STATUS_DOMAIN);
    CHECK(lp_last_error_message() != NULL);

    LpMapping *bad = NULL;
    CHECK(lp_mapping_from_json("{\"lambda\": 3}", &bad) == LP_STATUS_SCHEMA);
    CHECK(bad == NULL);

    printf("ffi smoke ok, version %s\n", lp_version());
    lp_mapping_free(m);
    return 0;
}
