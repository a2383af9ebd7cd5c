#include <stdio.h>
#include <string.h>

#include "amalgam_order.h"

static const char *TOWER =
    "group Zx = Z(x)\n"
    "group Zy = Z(y)\n"
    "subgroup A = cyclic(Zx: x^2, Zy: y^3)\n"
    "group T = amalgam(Zx, Zy, A, variant=1)\n";

#define CHECK(call)                                                        \
    do {                                                                   \
        AoStatus s_ = (call);                                              \
        if (s_ != AO_STATUS_OK) {                                          \
            fprintf(stderr, "%s failed: %d %s\n", #call, s_, ao_last_error()); \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    AoTower *tower = NULL;
    AoGroup *t = NULL;
    AoElement *x = NULL, *y = NULL, *m = NULL, *xy = NULL;
    char *text = NULL;
    int cmp = 0;

    CHECK(ao_tower_parse(TOWER, &tower));
    CHECK(ao_tower_group(tower, "T", &t));
    ao_tower_free(tower);
    CHECK(ao_element_parse(t, "x", &x));
    CHECK(ao_element_parse(t, "y^2", &y));
    CHECK(ao_compare(y, x, &cmp));
    if (cmp != -1) return 2;
    CHECK(ao_min_positive(t, &m));
    CHECK(ao_element_to_string(m, &text));
    if (strcmp(text, "y^-2*x") != 0) return 3;
    ao_string_free(text);
    CHECK(ao_mul(y, m, &xy));
    CHECK(ao_compare(xy, x, &cmp));
    if (cmp != 0) return 4;
    if (ao_element_parse(t, "z", &m) != AO_STATUS_PARSE_ERROR) return 5;
    if (ao_last_error() == NULL) return 6;

    ao_element_free(xy);
    ao_element_free(m);
    ao_element_free(y);
    ao_element_free(x);
    ao_group_free(t);
    puts("ok");
    return 0;
}
