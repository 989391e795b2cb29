#include <stdio.h>
#include <string.h>

#include "cubic_bundles.h"

static const char *INPUT =
    "{\"conductor\": 1, \"c0\": \"0\", \"cInf\": \"inf\", \"constants\": [\"1\", \"-1\"],"
    " \"divisors\": [[{\"point\": \"0\", \"mult\": 1}], [{\"point\": \"1\", \"mult\": 1}]]}";

int main(void) {
    CbInput *input = NULL;
    CbDescriptor *desc = NULL;
    bool projective = false;
    char *json = NULL;

    if (cb_input_parse(INPUT, &input) != CB_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", cb_last_error());
        return 1;
    }
    if (cb_decide_projective(input, &projective) != CB_STATUS_OK || !projective) {
        return 1;
    }
    if (cb_construct(input, &desc) != CB_STATUS_OK) {
        fprintf(stderr, "construct: %s\n", cb_last_error());
        return 1;
    }
    if (cb_descriptor_to_json(desc, &json) != CB_STATUS_OK || strstr(json, "sigma0") == NULL) {
        return 1;
    }
    printf("projective: %s\n", projective ? "yes" : "no");
    cb_string_free(json);
    cb_descriptor_free(desc);
    cb_input_free(input);

    if (cb_input_parse("{", &input) != CB_STATUS_PARSE) {
        return 1;
    }
    printf("error: %s\n", cb_status_message(CB_STATUS_PARSE));
    return 0;
}
