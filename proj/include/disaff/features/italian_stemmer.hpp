#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>

#include "disaff/util/utf8.hpp"

// Italian suffix stripper following the Snowball "italian" algorithm
// (M. Porter). The suffix tables below are the algorithm's data; the control
// flow mirrors its steps: attached pronouns, standard suffixes, verb
// suffixes, final vowel and ch/gh cleanup.

namespace disaff::features::italian {

namespace detail {

using Word = std::u32string;
using View = std::u32string_view;

// Upper-case I and U mark i/u acting as consonants between vowels and u
// after q; they are lowered again at the end.
inline constexpr char32_t kConsI = U'I';
inline constexpr char32_t kConsU = U'U';

constexpr bool is_vowel(char32_t c) {
    switch (c) {
        case U'a': case U'e': case U'i': case U'o': case U'u':
        case U'à': case U'è': case U'ì': case U'ò': case U'ù':
            return true;
        default:
            return false;
    }
}

inline constexpr std::array<View, 37> kPronouns = {
    U"ci",   U"gli",    U"la",     U"le",     U"li",     U"lo",     U"mi",   U"ne",   U"si",   U"ti",
    U"vi",   U"sene",   U"gliela", U"gliele", U"glieli", U"glielo", U"gliene", U"mela", U"mele", U"meli",
    U"melo", U"mene",   U"tela",   U"tele",   U"teli",   U"telo",   U"tene", U"cela", U"cele", U"celi",
    U"celo", U"cene",   U"vela",   U"vele",   U"veli",   U"velo",   U"vene",
};

enum class StdAction {
    del_r2,            // delete if in R2
    del_r2_ic,         // delete in R2; then a preceding "ic" in R2
    logia,             // -> "log" in R2
    uzione,            // -> "u" in R2
    enza,              // -> "ente" in R2
    del_rv,            // delete if in RV
    amente,            // delete in R1; then iv(+at) / os / ic / abil in R2
    ita,               // delete in R2; then abil / ic / iv in R2
    ivo,               // delete in R2; then at(+ic) in R2
};

struct StdSuffix {
    View suffix;
    StdAction action;
};

inline constexpr std::array<StdSuffix, 51> kStandardSuffixes = {{
    {U"anza", StdAction::del_r2},      {U"anze", StdAction::del_r2},     {U"ico", StdAction::del_r2},
    {U"ici", StdAction::del_r2},       {U"ica", StdAction::del_r2},      {U"ice", StdAction::del_r2},
    {U"iche", StdAction::del_r2},      {U"ichi", StdAction::del_r2},     {U"ismo", StdAction::del_r2},
    {U"ismi", StdAction::del_r2},      {U"abile", StdAction::del_r2},    {U"abili", StdAction::del_r2},
    {U"ibile", StdAction::del_r2},     {U"ibili", StdAction::del_r2},    {U"ista", StdAction::del_r2},
    {U"iste", StdAction::del_r2},      {U"isti", StdAction::del_r2},     {U"istà", StdAction::del_r2},
    {U"istè", StdAction::del_r2},      {U"istì", StdAction::del_r2},     {U"oso", StdAction::del_r2},
    {U"osi", StdAction::del_r2},       {U"osa", StdAction::del_r2},      {U"ose", StdAction::del_r2},
    {U"mente", StdAction::del_r2},     {U"atrice", StdAction::del_r2},   {U"atrici", StdAction::del_r2},
    {U"ante", StdAction::del_r2},      {U"anti", StdAction::del_r2},     {U"azione", StdAction::del_r2_ic},
    {U"azioni", StdAction::del_r2_ic}, {U"atore", StdAction::del_r2_ic}, {U"atori", StdAction::del_r2_ic},
    {U"logia", StdAction::logia},      {U"logie", StdAction::logia},     {U"uzione", StdAction::uzione},
    {U"uzioni", StdAction::uzione},    {U"usione", StdAction::uzione},   {U"usioni", StdAction::uzione},
    {U"enza", StdAction::enza},        {U"enze", StdAction::enza},       {U"amento", StdAction::del_rv},
    {U"amenti", StdAction::del_rv},    {U"imento", StdAction::del_rv},   {U"imenti", StdAction::del_rv},
    {U"amente", StdAction::amente},    {U"ità", StdAction::ita},         {U"ivo", StdAction::ivo},
    {U"ivi", StdAction::ivo},          {U"iva", StdAction::ivo},         {U"ive", StdAction::ivo},
}};

inline constexpr std::array<View, 86> kVerbSuffixes = {
    U"ammo", U"ando", U"ano", U"are", U"arono", U"asse", U"assero", U"assi", U"assimo",
    U"ata", U"ate", U"ati", U"ato", U"ava", U"avamo", U"avano", U"avate", U"avi",
    U"avo", U"emmo", U"enda", U"ende", U"endi", U"endo", U"erà", U"erai", U"eranno",
    U"ere", U"erebbe", U"erebbero", U"erei", U"eremmo", U"eremo", U"ereste", U"eresti", U"erete",
    U"erò", U"erono", U"essero", U"ete", U"eva", U"evamo", U"evano", U"evate", U"evi",
    U"evo", U"iamo", U"immo", U"irà", U"irai", U"iranno", U"ire", U"irebbe", U"irebbero",
    U"irei", U"iremmo", U"iremo", U"ireste", U"iresti", U"irete", U"irò", U"irono", U"isca",
    U"iscano", U"isce", U"isci", U"isco", U"iscono", U"issero", U"ita", U"ite", U"iti",
    U"ito", U"iva", U"ivamo", U"ivano", U"ivate", U"ivi", U"ivo", U"ono", U"uta",
    U"ute", U"uti", U"uto", U"ar", U"ir",
};

struct Regions {
    std::size_t rv;
    std::size_t r1;
    std::size_t r2;
};

inline void prelude(Word& w) {
    for (auto& c : w) {
        switch (c) {
            case U'á': c = U'à'; break;
            case U'é': c = U'è'; break;
            case U'í': c = U'ì'; break;
            case U'ó': c = U'ò'; break;
            case U'ú': c = U'ù'; break;
            default: break;
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == U'q' && w[i + 1] == U'u') w[i + 1] = kConsU;
    }
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if (is_vowel(w[i - 1]) && is_vowel(w[i + 1])) {
            if (w[i] == U'i') w[i] = kConsI;
            else if (w[i] == U'u') w[i] = kConsU;
        }
    }
}

/// Position just past the first non-vowel that follows a vowel, at or after
/// `from`; `w.size()` if none.
inline std::size_t region_after(const Word& w, std::size_t from) {
    for (std::size_t i = from; i + 1 < w.size(); ++i) {
        if (is_vowel(w[i]) && !is_vowel(w[i + 1])) return i + 2;
    }
    return w.size();
}

inline Regions mark_regions(const Word& w) {
    const std::size_t n = w.size();
    std::size_t rv = n;
    if (n >= 2) {
        if (!is_vowel(w[1])) {
            // Second letter a consonant: RV follows the next vowel.
            for (std::size_t i = 2; i < n; ++i) {
                if (is_vowel(w[i])) {
                    rv = i + 1;
                    break;
                }
            }
        } else if (is_vowel(w[0])) {
            // First two letters vowels: RV follows the next consonant.
            for (std::size_t i = 2; i < n; ++i) {
                if (!is_vowel(w[i])) {
                    rv = i + 1;
                    break;
                }
            }
        } else {
            rv = std::min<std::size_t>(3, n);
        }
    }
    const std::size_t r1 = region_after(w, 0);
    const std::size_t r2 = r1 < n ? region_after(w, r1) : n;
    return {rv, r1, r2};
}

inline bool ends_at(const Word& w, std::size_t end, View suffix) {
    return end >= suffix.size() && View{w}.substr(end - suffix.size(), suffix.size()) == suffix;
}

/// Longest entry of `table` (by projection) that `w` ends with.
template <class Table, class Proj>
const auto* longest_match(const Word& w, const Table& table, Proj proj) {
    const typename Table::value_type* best = nullptr;
    for (const auto& entry : table) {
        const View s = proj(entry);
        if (ends_at(w, w.size(), s) && (!best || s.size() > proj(*best).size())) best = &entry;
    }
    return best;
}

inline void attached_pronoun(Word& w, const Regions& r) {
    const auto* p = longest_match(w, kPronouns, [](View v) { return v; });
    if (!p) return;
    const std::size_t stem_end = w.size() - p->size();
    static constexpr std::array<View, 5> kGerund = {U"ando", U"endo", U"ar", U"er", U"ir"};
    View found;
    for (View g : kGerund) {
        if (ends_at(w, stem_end, g) && g.size() > found.size()) found = g;
    }
    if (found.empty() || stem_end - found.size() < r.rv) return;
    if (found.size() == 4) {
        w.erase(stem_end);
    } else {
        w.erase(stem_end);
        w.push_back(U'e');
    }
}

/// Returns true when a suffix was removed or replaced.
inline bool standard_suffix(Word& w, const Regions& r) {
    const auto* m = longest_match(w, kStandardSuffixes, [](const StdSuffix& s) { return s.suffix; });
    if (!m) return false;
    const std::size_t start = w.size() - m->suffix.size();
    const auto in_r2 = [&](std::size_t pos) { return pos >= r.r2; };
    const auto strip_if = [&](View s, std::size_t min_pos) {
        if (ends_at(w, w.size(), s) && w.size() - s.size() >= min_pos) {
            w.erase(w.size() - s.size());
            return true;
        }
        return false;
    };
    switch (m->action) {
        case StdAction::del_r2:
            if (!in_r2(start)) return false;
            w.erase(start);
            return true;
        case StdAction::del_r2_ic:
            if (!in_r2(start)) return false;
            w.erase(start);
            strip_if(U"ic", r.r2);
            return true;
        case StdAction::logia:
            if (!in_r2(start)) return false;
            w.erase(start + 3);
            return true;
        case StdAction::uzione:
            if (!in_r2(start)) return false;
            w.erase(start + 1);
            return true;
        case StdAction::enza:
            if (!in_r2(start)) return false;
            w.erase(start);
            w += U"ente";
            return true;
        case StdAction::del_rv:
            if (start < r.rv) return false;
            w.erase(start);
            return true;
        case StdAction::amente:
            if (start < r.r1) return false;
            w.erase(start);
            if (strip_if(U"iv", r.r2)) {
                strip_if(U"at", r.r2);
            } else if (!strip_if(U"abil", r.r2) && !strip_if(U"os", r.r2)) {
                strip_if(U"ic", r.r2);
            }
            return true;
        case StdAction::ita:
            if (!in_r2(start)) return false;
            w.erase(start);
            if (!strip_if(U"abil", r.r2) && !strip_if(U"ic", r.r2)) strip_if(U"iv", r.r2);
            return true;
        case StdAction::ivo:
            if (!in_r2(start)) return false;
            w.erase(start);
            if (strip_if(U"at", r.r2)) strip_if(U"ic", r.r2);
            return true;
    }
    return false;
}

/// The verb-suffix search is confined to RV: the longest suffix lying wholly
/// inside RV wins.
inline void verb_suffix(Word& w, const Regions& r) {
    std::size_t best = 0;
    for (View v : kVerbSuffixes) {
        if (v.size() > best && ends_at(w, w.size(), v) && w.size() - v.size() >= r.rv) best = v.size();
    }
    if (best) w.erase(w.size() - best);
}

inline void vowel_suffix(Word& w, const Regions& r) {
    static constexpr View kFinal = U"aeioàèìò";
    if (!w.empty() && w.size() - 1 >= r.rv && kFinal.find(w.back()) != View::npos) {
        w.pop_back();
        if (!w.empty() && w.back() == U'i' && w.size() - 1 >= r.rv) w.pop_back();
    }
    if (w.size() >= 2 && w.size() - 2 >= r.rv && w.back() == U'h' && (w[w.size() - 2] == U'c' || w[w.size() - 2] == U'g')) {
        w.pop_back();
    }
}

}  // namespace detail

/// Stems one lowercase word. Tokens containing no vowel (punctuation,
/// numbers, "<link>") come back unchanged.
inline std::string stem(std::string_view word) {
    auto w = util::decode_utf8(word);
    if (w.size() < 2) return std::string{word};
    detail::prelude(w);
    if (std::none_of(w.begin(), w.end(), detail::is_vowel)) return std::string{word};
    const auto regions = detail::mark_regions(w);
    detail::attached_pronoun(w, regions);
    if (!detail::standard_suffix(w, regions)) detail::verb_suffix(w, regions);
    detail::vowel_suffix(w, regions);
    for (auto& c : w) {
        if (c == detail::kConsI) c = U'i';
        else if (c == detail::kConsU) c = U'u';
    }
    return util::encode_utf8(w);
}

}  // namespace disaff::features::italian
