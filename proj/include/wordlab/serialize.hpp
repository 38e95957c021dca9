#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wordlab/classifiers.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/theorem_lab.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

/// Palindromic factors sorted by length, then bytewise.
inline std::vector<std::string> sorted_palindromes(std::string_view w) {
    std::vector<std::string> out;
    for (const auto& u : palindromic_factors(w)) out.push_back(u.str());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

/// Flat analysis object: profiles, indices, verdicts and palindromic factors.
inline Json analysis_json(std::string_view w) {
    const auto report = classify(w);
    Json j;
    j["schema_version"] = schema_version;
    j["word"] = std::string(w);
    j["alphabet"] = distinct_symbols(w);
    j["length"] = w.size();
    j["C"] = subword_complexity(w).values;
    j["P"] = palindromic_complexity(w).values;
    if (w.empty()) {
        j["D"] = nullptr;
        j["trapezoid_runs"] = nullptr;
    } else {
        const auto d = difference_profile(w);
        j["D"] = d.values;
        j["trapezoid_runs"] = d.runs ? Json{{"r", d.runs->r}, {"s", d.runs->s}} : Json(nullptr);
    }
    j["R"] = report.indices.r_index;
    j["K"] = report.indices.k_index;
    j["pi"] = w.empty() ? Json(nullptr) : Json(report.indices.min_period);
    j["is_palindrome"] = report.is_palindrome;
    j["is_rich"] = report.is_rich;
    j["is_trapezoidal"] = report.is_trapezoidal;
    j["is_balanced"] = report.is_balanced ? Json(*report.is_balanced) : Json(nullptr);
    j["is_finite_sturmian"] = report.is_finite_sturmian;
    j["is_sturmian_palindrome"] = report.is_sturmian_palindrome;
    j["condition_B"] = report.condition_B;
    j["condition_B_prime"] = report.condition_B_prime;
    j["palindrome_count"] = report.palindrome_count;
    j["unbalance_witness"] = report.unbalance_witness ? Json(report.unbalance_witness->str()) : Json(nullptr);
    j["palindromic_factors"] = sorted_palindromes(w);
    return j;
}

/// Deterministic report object; elapsed time is deliberately left out.
inline Json to_json(const VerificationReport& r) {
    Json j;
    j["schema_version"] = schema_version;
    j["claim"] = std::string(claim_name(r.claim));
    j["alphabet"] = r.alphabet.symbols();
    j["max_len"] = r.max_len;
    j["words_checked"] = r.words_checked;
    j["verified"] = r.verified();
    Json list = Json::array();
    for (const auto& c : r.counterexamples) list.push_back({{"word", c.word.str()}, {"diagnostic", c.diagnostic}});
    j["counterexamples"] = std::move(list);
    return j;
}

inline std::string counterexamples_csv(const VerificationReport& r) {
    std::string out = "word,diagnostic\n";
    for (const auto& c : r.counterexamples) out += csv_field(c.word.str()) + "," + csv_field(c.diagnostic) + "\n";
    return out;
}

inline constexpr std::array<std::pair<std::string_view, std::uint64_t CensusRow::*>, 9> census_columns{{
    {"total", &CensusRow::total},
    {"rich", &CensusRow::rich},
    {"trapezoidal", &CensusRow::trapezoidal},
    {"balanced", &CensusRow::balanced},
    {"sturmian_palindrome", &CensusRow::sturmian_palindrome},
    {"condition_B", &CensusRow::condition_B},
    {"condition_B_prime", &CensusRow::condition_B_prime},
    {"palindromes", &CensusRow::palindromes},
    {"trapezoidal_palindromes", &CensusRow::trapezoidal_palindromes},
}};

inline Json to_json(const CensusTable& t) {
    Json j;
    j["schema_version"] = schema_version;
    j["alphabet"] = t.alphabet.symbols();
    j["max_len"] = t.max_len;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r;
        r["length"] = row.length;
        for (const auto& [name, field] : census_columns) r[std::string(name)] = row.*field;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline std::string census_csv(const CensusTable& t) {
    std::string out = "length";
    for (const auto& col : census_columns) out += "," + std::string(col.first);
    out += "\n";
    for (const auto& row : t.rows) {
        out += std::to_string(row.length);
        for (const auto& col : census_columns) out += "," + std::to_string(row.*col.second);
        out += "\n";
    }
    return out;
}

}  // namespace wordlab
