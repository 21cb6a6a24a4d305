#include <stdio.h>
#include <string.h>

#include "krasner.h"

static int check(int ok, const char *what) {
    if (!ok) {
        fprintf(stderr, "failed: %s (%s)\n", what, kr_last_error());
    }
    return ok ? 0 : 1;
}

int main(void) {
    int bad = 0;
    KrHyperring *h = NULL;
    bad += check(kr_hyperring_from_catalog("z12-mod-units", &h) == KR_OK, "catalog lookup");

    size_t size = 0, m = 0, n = 0;
    bad += check(kr_hyperring_shape(h, &size, &m, &n) == KR_OK && size == 6 && m == 2 && n == 2, "shape");

    char *radical = NULL;
    bad += check(kr_radical(h, "c0", &radical) == KR_OK && strcmp(radical, "{c0,c6}") == 0, "nilradical");
    kr_string_free(radical);

    int32_t holds = -1;
    bad += check(kr_is_delta_n(h, "c0,c2,c4,c6", "d1", KR_LAX, &holds, NULL) == KR_OK && holds == 1, "lax verdict");
    bad += check(kr_is_delta_n(h, "c0,c2,c4,c6", "d1", KR_STRICT, &holds, NULL) == KR_OK && holds == 0, "strict verdict");

    KrHyperring *broken = NULL;
    KrStatus s = kr_hyperring_parse("hyperring x arity (2, 2)\nelements: 0\n", &broken);
    bad += check(s == KR_PARSE_ERROR && broken == NULL && strlen(kr_last_error()) > 0, "parse error");

    kr_hyperring_free(h);
    printf("%s\n", bad == 0 ? "ok" : "not ok");
    return bad;
}
