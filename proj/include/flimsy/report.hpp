#pragma once

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace flimsy {

using Json = nlohmann::json;

enum class Verdict { Pass, Fail, Vacuous };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Vacuous: return "vacuous";
    }
    return "?";
}

// Outcome of one axiom / lemma / property check.  `witness` carries the
// concrete tuple exhibiting a violation (empty object on pass); witnesses are
// self-describing JSON so they can be replayed by the CLI.
struct Report {
    std::string check;
    Verdict verdict = Verdict::Pass;
    Json witness = Json::object();

    bool passed() const { return verdict != Verdict::Fail; }

    static Report pass(std::string check) { return {std::move(check), Verdict::Pass, Json::object()}; }
    static Report vacuous(std::string check) { return {std::move(check), Verdict::Vacuous, Json::object()}; }
    static Report fail(std::string check, Json witness) {
        return {std::move(check), Verdict::Fail, std::move(witness)};
    }
};

inline void to_json(Json& j, const Report& r) {
    j = Json{{"axiom", r.check}, {"verdict", verdict_str(r.verdict)}, {"witness", r.witness}};
}

}  // namespace flimsy
