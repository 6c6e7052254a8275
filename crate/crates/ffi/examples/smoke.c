#include <inttypes.h>
#include <stdio.h>
#include "latgroup.h"

static int check(LgStatus st, const char *what) {
    if (st != LG_STATUS_OK) {
        fprintf(stderr, "%s: status %d: %s\n", what, (int)st, lg_last_error_message());
        return 1;
    }
    return 0;
}

int main(void) {
    LgWord *a = NULL, *b = NULL;
    LgMetElem *ma = NULL, *mb = NULL;
    bool eq = true;
    char *json = NULL;
    int64_t beta = 0;

    if (check(lg_word_parse("x1 x2", 2, &a), "parse a")) return 1;
    if (check(lg_word_parse("x2 x1", 2, &b), "parse b")) return 1;
    if (check(lg_met_from_word(a, &ma), "met a")) return 1;
    if (check(lg_met_from_word(b, &mb), "met b")) return 1;
    if (check(lg_met_eq(ma, mb, &eq), "eq")) return 1;
    printf("equal=%d\n", eq);
    if (check(lg_met_to_json(ma, &json), "json")) return 1;
    printf("%s\n", json);
    lg_string_free(json);
    if (check(lg_beta_scaled(-3, &beta), "beta")) return 1;
    printf("beta=%" PRId64 "\n", beta);

    LgWord *bad = NULL;
    LgStatus st = lg_word_parse("x1 x4", 2, &bad);
    printf("status=%d message=%s\n", (int)st, lg_last_error_message());

    lg_met_free(ma);
    lg_met_free(mb);
    lg_word_free(a);
    lg_word_free(b);
    return 0;
}
