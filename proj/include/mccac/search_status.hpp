#ifndef MCCAC_SEARCH_STATUS_HPP
#define MCCAC_SEARCH_STATUS_HPP

namespace mccac {

/// Outcome kind of an exact backtracking search. A budget stop says nothing
/// about existence; only an exhausted tree proves nonexistence.
enum class SearchStatus {
    Found,
    ProvenNonexistent,
    BudgetExhausted,
};

inline const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ProvenNonexistent: return "proven-nonexistent";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

}  // namespace mccac

#endif  // MCCAC_SEARCH_STATUS_HPP
