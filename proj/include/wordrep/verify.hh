/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_VERIFY_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_VERIFY_HH 1

#include <wordrep/board.hh>
#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>
#include <wordrep/semitrans.hh>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep
{
    /// Verdicts for one triangulation.
    struct Classification
    {
        std::string board;
        std::string triangulation;
        bool three_colourable = false;
        Verdict word_representable = Verdict::BudgetExceeded;
        std::optional<std::string> forbidden_hit;
        bool embedded_hit = false;
        std::optional<Colouring> colouring;       ///< 3-colouring certificate
        std::optional<Orientation> orientation;   ///< semi-transitive certificate
    };

    /// Re-checks the certificates from scratch: a Yes needs a valid
    /// semi-transitive orientation, a 3-colourable verdict a proper
    /// 3-colouring.
    auto certificates_valid(const Graph &, const Classification &) -> bool;

    /// Fills every verdict for one graph. Uses the 3-colouring fast path
    /// where possible, the orientation search otherwise.
    auto classify(const EmbeddedGraph &, const ForbiddenSet &, const SearchBudget & = {}) -> Classification;

    inline constexpr const char * equivalence_claim = "3-colourable iff word-representable";
    inline constexpr const char * forbidden_subgraph_claim = "not 3-colourable iff contains a forbidden induced subgraph";
    inline constexpr const char * flip_claim = "flipping the domino preserves 3-colourability";

    struct Violation
    {
        std::string board;
        std::string triangulation;
        std::string claim;
        std::string detail;
    };

    enum class SweepStatus
    {
        Pass,
        Violation,
        Inconclusive
    };

    auto to_string(SweepStatus) -> const char *;

    struct SweepReport
    {
        int boards = 0;
        std::uint64_t triangulations = 0;
        std::vector<Violation> violations;
        std::uint64_t budget_exceeded = 0;
        std::uint64_t three_colourable = 0;
        std::uint64_t flip_checks = 0;
        std::uint64_t embedded_hits = 0;
        std::uint64_t general_only_hits = 0;
        /// triangulations where the literal closure disagrees with
        /// non-3-colourability; reported, never a violation
        std::uint64_t literal_discrepancies = 0;
        std::uint64_t literal_checked = 0;
        std::vector<Classification> classifications;

        auto status() const -> SweepStatus;
        auto violations_of(std::string_view claim) const -> std::size_t;

        auto merge(SweepReport &&) -> void;
    };

    struct VerifyOptions
    {
        SearchBudget budget{};
        int jobs = 1;
        ClosurePolicy policy = ClosurePolicy::Extended;
        /// also match against the literal closure and count disagreements
        bool compare_literal = true;
        bool keep_classifications = true;
    };

    /**
     * Runs the per-triangulation checks over boards.
     *
     * Triangulations are classified in parallel and reported in choice
     * vector order. Non-representability verdicts are cached under a key
     * that is invariant under the eight grid symmetries, since symmetric
     * triangulations give isomorphic graphs.
     */
    class Verifier
    {
        private:
            VerifyOptions _options;
            ForbiddenSet _forbidden;
            std::optional<ForbiddenSet> _literal;

            mutable std::mutex _cache_mutex;
            mutable std::map<std::string, Verdict> _cache;

            auto classify_one(const Board &, const Triangulation &, const EmbeddedGraph &) const -> Classification;

        public:
            explicit Verifier(VerifyOptions = {});

            auto options() const -> const VerifyOptions & { return _options; }
            auto forbidden() const -> const ForbiddenSet & { return _forbidden; }

            auto classify(const Board &, const Triangulation &) const -> Classification;

            /**
             * For every triangulation: 3-colourable iff word-representable,
             * and not 3-colourable iff some member of the forbidden set is
             * an induced subgraph. Certificates are re-validated. Throws
             * BoardError for boards with more than one domino.
             */
            auto verify_theorem(const Board &) const -> SweepReport;

            /// 3-colourability is unchanged by flipping the single domino's
            /// pattern. Throws BoardError unless there is exactly one domino.
            auto verify_domino_flip(const Board &) const -> SweepReport;

            /**
             * The cell_rows x cell_cols board: with mode 0 the plain board,
             * with mode 1 every horizontal domino placement. Single-domino
             * boards also get the flip check.
             */
            auto sweep(int cell_rows, int cell_cols, const std::vector<int> & domino_modes) const -> SweepReport;

            /// sweep() over every board shape r x c with r <= cell_rows and
            /// c <= cell_cols, rows outermost.
            auto sweep_up_to(int cell_rows, int cell_cols, const std::vector<int> & domino_modes) const -> SweepReport;

            auto cache_size() const -> std::size_t;
    };

    /**
     * The built-in patterns: each is not 3-colourable and not
     * word-representable, contains the stated odd wheel, and A1 without its
     * leftmost middle-row vertex is W9; the odd wheels W5, W7, W9 are not
     * word-representable.
     */
    auto verify_catalog(const SearchBudget & = {}) -> SweepReport;

    /// Odd wheel each pattern is known to contain as an induced subgraph.
    auto stated_wheel(const std::string & pattern) -> int;

    /// Key shared by all eight symmetric images of a drawing.
    auto symmetry_key(const EmbeddedGraph &) -> std::string;
}

#endif
