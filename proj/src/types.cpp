#include "streamsum/types.hpp"

namespace streamsum {

const char* to_string(DetectorMethod m) {
    return m == DetectorMethod::increase ? "increase" : "outliers";
}

const char* to_string(SelectorMethod m) { return m == SelectorMethod::tf ? "tf" : "kld"; }

DetectorMethod detector_from_string(const std::string& s) {
    if (s == "increase") return DetectorMethod::increase;
    if (s == "outliers") return DetectorMethod::outliers;
    throw std::invalid_argument("unknown detector: " + s);
}

SelectorMethod selector_from_string(const std::string& s) {
    if (s == "tf") return SelectorMethod::tf;
    if (s == "kld") return SelectorMethod::kld;
    throw std::invalid_argument("unknown selector: " + s);
}

const char* to_string(AnnotationKind k) {
    switch (k) {
        case AnnotationKind::goal: return "goal";
        case AnnotationKind::penalty: return "penalty";
        case AnnotationKind::red_card: return "red_card";
        case AnnotationKind::disallowed_goal: return "disallowed_goal";
        case AnnotationKind::game_start: return "game_start";
        case AnnotationKind::game_end: return "game_end";
        case AnnotationKind::stop_or_resumption: return "stop_or_resumption";
    }
    return "?";
}

AnnotationKind annotation_kind_from_string(const std::string& s) {
    if (s == "goal") return AnnotationKind::goal;
    if (s == "penalty") return AnnotationKind::penalty;
    if (s == "red_card") return AnnotationKind::red_card;
    if (s == "disallowed_goal") return AnnotationKind::disallowed_goal;
    if (s == "game_start") return AnnotationKind::game_start;
    if (s == "game_end") return AnnotationKind::game_end;
    if (s == "stop_or_resumption") return AnnotationKind::stop_or_resumption;
    throw std::invalid_argument("unknown annotation kind: " + s);
}

}  // namespace streamsum
