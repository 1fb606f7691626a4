#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extpow/matrix.hpp"

namespace extpow {

/// A sorted m-subset of [n]; the row/column index type of the exterior
/// representation.
struct WeightIndex {
    std::vector<int> elems;  // strictly ascending, 1-based

    WeightIndex() = default;
    explicit WeightIndex(std::vector<int> e);

    static WeightIndex parse(const std::string& csv);
    std::string str() const;

    std::size_t size() const { return elems.size(); }
    bool contains(int v) const;
    WeightIndex replaced(int out, int in) const;
    WeightIndex with(int v) const;
    WeightIndex without(int v) const;

    auto operator<=>(const WeightIndex&) const = default;
};

int intersection_size(const WeightIndex& a, const WeightIndex& b);
inline int height(const WeightIndex& a, const WeightIndex& b) {
    return intersection_size(a, b);
}

class ExteriorContext;
using CtxPtr = std::shared_ptr<const ExteriorContext>;

/// Indexing data for the m-th exterior power of [n]: the lexicographic table
/// of weight indices and its rank map.  N = C(n,m).
class ExteriorContext {
public:
    static CtxPtr make(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    std::size_t N() const { return table_.size(); }

    const std::vector<WeightIndex>& table() const { return table_; }
    std::size_t rank(const WeightIndex& w) const;  // 1-based
    const WeightIndex& unrank(std::size_t r) const { return table_[r - 1]; }

    ExteriorContext(int n, int m);

private:
    int n_, m_;
    std::vector<WeightIndex> table_;
};

/// All m-subsets of `universe` (ascending) in lexicographic order.
std::vector<WeightIndex> subsets_of(const std::vector<int>& universe, int m);

/// Sign of the (L,i,j) minor position: the permutation sign of the sequence
/// (L ascending, i, j) for i < j, extended symmetrically in i and j so that
/// the transvection decomposition below reproduces the Binet-Cauchy image
/// for every i != j.  Equals (-1)^(#{l in L: l > i} + #{l in L: l > j}).
int weight_sign(const WeightIndex& L, int i, int j);

/// Single exterior transvection t_{I,J}(arg) in GL_N.
struct ExtLetter {
    WeightIndex I, J;
    RingElem arg;
};

/// Word atom: either a single ext transvection or a whole wedge generator
/// wedge^m t_{i,j}(arg), which expands through the decomposition formula.
struct WordAtom {
    enum class Kind { Ext, Wedge };
    Kind kind = Kind::Ext;
    WeightIndex I, J;  // Ext
    int i = 0, j = 0;  // Wedge
    RingElem arg;

    static WordAtom ext(WeightIndex I, WeightIndex J, RingElem arg);
    static WordAtom wedge(int i, int j, RingElem arg);
    WordAtom inverse() const;
};

struct ExtWord {
    std::vector<WordAtom> atoms;

    ExtWord& append(const WordAtom& a) {
        atoms.push_back(a);
        return *this;
    }
    ExtWord& append(const ExtWord& w) {
        atoms.insert(atoms.end(), w.atoms.begin(), w.atoms.end());
        return *this;
    }
    ExtWord inverse() const;
    static ExtWord commutator(const ExtWord& a, const ExtWord& b);
    static ExtWord conjugate(const ExtWord& by, const ExtWord& of);
    static ExtWord single(const ExtLetter& l);
};

/// The Binet-Cauchy image: entry (rank I, rank J) is the (I,J) minor.
Matrix exterior_power(const CtxPtr& ctx, const Matrix& a);

/// Decomposition of wedge^m t_{i,j}(xi) into C(n-2, m-1) pairwise commuting
/// exterior transvections t_{L+i, L+j}(weight_sign(L,i,j) * xi).
ExtWord transvection_decomposition(const CtxPtr& ctx, int i, int j,
                                   const RingElem& xi);

Matrix ext_letter_matrix(const CtxPtr& ctx, const RingPtr& ring,
                         const ExtLetter& l);

/// Exact evaluation of a word in GL_N; a fast modular backend is used
/// automatically when the ring allows it.
Matrix evaluate_word(const CtxPtr& ctx, const ExtWord& w, const RingPtr& ring);
bool word_is_identity(const CtxPtr& ctx, const ExtWord& w,
                      const RingPtr& ring);
bool words_equal(const CtxPtr& ctx, const ExtWord& a, const ExtWord& b,
                 const RingPtr& ring);
/// If the word evaluates to e + c*E_{I,J} (I != J, c != 0), returns that
/// letter; identity and anything else return nullopt.
std::optional<ExtLetter> word_single_transvection(const CtxPtr& ctx,
                                                  const ExtWord& w,
                                                  const RingPtr& ring);

enum class CommCase { Identity, Single, Triple, Irreducible };

/// Classified commutator [t_{I,J}(xi), wedge^m t_{i,j}(zeta)].
struct CommResult {
    CommCase kind = CommCase::Identity;
    std::vector<ExtLetter> factors;  // Single: 1; Triple: 3 (display order)
    ExtWord word;                    // always evaluates to the commutator
};

CommResult classify_commutator(const CtxPtr& ctx, const ExtLetter& t, int i,
                               int j, const RingElem& zeta);

}  // namespace extpow
