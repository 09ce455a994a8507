#include <stdio.h>
#include "mcgkit.h"

int main(void) {
    const char *a_json = "{\"surface\":\"canonical:1,0,0\",\"word\":[{\"edge\":0,\"pos\":0,\"dir\":1}]}";
    const char *b_json = "{\"surface\":\"canonical:1,0,0\",\"word\":[{\"edge\":1,\"pos\":0,\"dir\":1}]}";
    McgCurve *a = NULL, *b = NULL, *t = NULL;
    size_t i = 0;
    if (mcg_curve_from_json(a_json, NULL, &a) != MCG_STATUS_OK || mcg_curve_from_json(b_json, NULL, &b) != MCG_STATUS_OK) {
        fprintf(stderr, "%s\n", mcg_last_error());
        return 1;
    }
    mcg_dehn_twist(b, a, 2, &t);
    mcg_intersection_number(t, b, &i);
    printf("I(T_a^2 b, b) = %zu\n", i);
    mcg_curve_free(a);
    mcg_curve_free(b);
    mcg_curve_free(t);
    return i == 2 ? 0 : 1;
}
