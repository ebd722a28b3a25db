#include <stdio.h>
#include <string.h>
#include "warping.h"

int main(void) {
    WdDiagram *d = NULL;
    if (wd_diagram_parse("O1+ U2+\nU1+ O2+\n", &d) != WD_STATUS_OK) return 1;
    size_t value = 0;
    if (wd_warping_degree(d, 0, &value) != WD_STATUS_OK || value != 1) return 2;
    int64_t link = 0;
    if (wd_linking_number_twice(d, 0, 1, &link) != WD_STATUS_OK || link != 2) return 3;
    char *word = NULL;
    if (wd_normalize_word("oouuouuouuouoouoou", &word) != WD_STATUS_OK || strcmp(word, "uuoo") != 0) return 4;
    wd_string_free(word);
    if (wd_diagram_parse("O1+", &d) != WD_STATUS_PARSE_ERROR || wd_last_error_message() == NULL) return 5;
    wd_diagram_free(d);
    puts("ok");
    return 0;
}
