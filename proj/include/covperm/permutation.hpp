#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace covperm {

/// A permutation of {1..n}, stored as the image table f(1),...,f(n).
/// Indexing is 1-based everywhere in the public interface.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n == 0) throw std::invalid_argument("permutation: empty image table");
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : images_) {
            if (v < 1 || v > n) throw std::invalid_argument("permutation: image out of range");
            if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation: duplicate image");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images_.size()); }

    int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline Permutation from_images(std::vector<int> images) { return Permutation(std::move(images)); }

/// True iff the orbit of 1 has length n (the permutation is a single n-cycle).
inline bool is_cyclic(const Permutation& p) {
    int len = 0;
    int cur = 1;
    do {
        cur = p(cur);
        ++len;
    } while (cur != 1 && len <= p.degree());
    return len == p.degree();
}

/// l-fold composition; power(p, 0) is the identity.
inline Permutation power(const Permutation& p, int l) {
    if (l < 0) throw std::invalid_argument("power: negative exponent");
    const int n = p.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int cur = i;
        for (int s = 0; s < l; ++s) cur = p(cur);
        img[static_cast<std::size_t>(i) - 1] = cur;
    }
    return Permutation(std::move(img));
}

/// An n-cycle together with its cycle order canonicalized to start at 1.
class CyclicPermutation {
public:
    explicit CyclicPermutation(Permutation p) : perm_(std::move(p)) {
        if (!is_cyclic(perm_)) throw std::invalid_argument("permutation is not cyclic");
        cycle_order_.reserve(static_cast<std::size_t>(perm_.degree()));
        int cur = 1;
        do {
            cycle_order_.push_back(cur);
            cur = perm_(cur);
        } while (cur != 1);
    }

    const Permutation& perm() const { return perm_; }
    const std::vector<int>& cycle_order() const { return cycle_order_; }
    int degree() const { return perm_.degree(); }
    int operator()(int i) const { return perm_(i); }

    std::string cycle_string() const {
        std::ostringstream out;
        for (std::size_t j = 0; j < cycle_order_.size(); ++j) {
            if (j) out << ' ';
            out << cycle_order_[j];
        }
        return out.str();
    }

    friend bool operator==(const CyclicPermutation& a, const CyclicPermutation& b) {
        return a.perm_ == b.perm_;
    }

private:
    Permutation perm_;
    std::vector<int> cycle_order_;
};

/// Builds the n-cycle seq[0] -> seq[1] -> ... -> seq[n-1] -> seq[0].
inline CyclicPermutation from_cycle_notation(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    if (n == 0) throw std::invalid_argument("cycle notation: empty input");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > n) throw std::invalid_argument("cycle notation: entry out of range");
        if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("cycle notation: duplicate entry");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        img[static_cast<std::size_t>(seq[static_cast<std::size_t>(j)]) - 1] =
            seq[static_cast<std::size_t>((j + 1) % n)];
    return CyclicPermutation(Permutation(std::move(img)));
}

/// The rotation i -> i+m (mod n); requires gcd(m, n) = 1 so the result is an n-cycle.
inline CyclicPermutation rotation(int n, int m) {
    if (n < 2 || m < 1 || m >= n) throw std::invalid_argument("rotation: need n >= 2 and 1 <= m < n");
    if (std::gcd(n, m) != 1) throw std::invalid_argument("rotation: gcd(m, n) must be 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i) - 1] = (i + m - 1) % n + 1;
    return CyclicPermutation(Permutation(std::move(img)));
}

/// The odd-degree cycle 1 -> n+1 -> n+2 -> n -> n+3 -> n-1 -> ... -> 2n -> 2 -> 2n+1 -> 1
/// for N = 2n+1.
inline CyclicPermutation stefan(int N) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("stefan: degree must be odd and >= 3");
    const int n = (N - 1) / 2;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(N));
    order.push_back(1);
    order.push_back(n + 1);
    for (int j = 2; j <= n; ++j) {
        order.push_back(n + j);
        order.push_back(n + 2 - j);
    }
    order.push_back(2 * n + 1);
    return from_cycle_notation(order);
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

/// Lazy enumeration of all (n-1)! cyclic permutations of S_n, in lexicographic
/// order of the cycle order (1, a_2, ..., a_n). Supports chunking via unrank so
/// sweeps can split the range across workers deterministically.
class CyclicRange {
public:
    explicit CyclicRange(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("enumerate_cyclic: n must be >= 1");
    }

    static std::uint64_t count(int n) { return factorial(n - 1); }

    /// The idx-th arrangement of {2..n} in lexicographic order (factorial-base decode).
    static CyclicPermutation unrank(int n, std::uint64_t idx) {
        std::vector<int> pool;
        pool.reserve(static_cast<std::size_t>(n) - 1);
        for (int v = 2; v <= n; ++v) pool.push_back(v);
        std::vector<int> order{1};
        std::uint64_t rem = idx;
        for (int used = 0; used < n - 1; ++used) {
            const std::uint64_t block = factorial(n - 2 - used);
            const std::size_t pick = static_cast<std::size_t>(rem / block);
            rem %= block;
            order.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        return from_cycle_notation(order);
    }

    class iterator {
    public:
        iterator() = default;
        iterator(int n, std::vector<int> order, bool done) : n_(n), order_(std::move(order)), done_(done) {}

        CyclicPermutation operator*() const { return from_cycle_notation(order_); }

        iterator& operator++() {
            if (n_ <= 1) {
                done_ = true;
                return *this;
            }
            if (!std::next_permutation(order_.begin() + 1, order_.end())) done_ = true;
            return *this;
        }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.order_ == b.order_);
        }

    private:
        int n_ = 0;
        std::vector<int> order_;
        bool done_ = true;
    };

    iterator begin() const {
        std::vector<int> order(static_cast<std::size_t>(n_));
        std::iota(order.begin(), order.end(), 1);
        return iterator(n_, std::move(order), false);
    }

    iterator end() const { return iterator(n_, {}, true); }

private:
    int n_;
};

/// Visits cyclic permutations with enumeration indices in [first, last).
template <typename Fn>
void for_each_cyclic(int n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
    if (first >= last) return;
    if (n == 1) {
        fn(CyclicRange::unrank(1, 0));
        return;
    }
    CyclicPermutation p = CyclicRange::unrank(n, first);
    std::vector<int> order = p.cycle_order();
    for (std::uint64_t i = first; i < last; ++i) {
        fn(from_cycle_notation(order));
        if (!std::next_permutation(order.begin() + 1, order.end())) break;
    }
}

/// Parses the CLI permutation syntax: "(1 3 6 2 4 5)", "1 3 6 2 4 5", or "img:3,2,1".
inline Permutation parse_permutation(const std::string& text) {
    std::string s = text;
    auto strip = [](std::string& t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    strip(s);
    if (s.rfind("img:", 0) == 0) {
        std::string body = s.substr(4);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream in(body);
        std::vector<int> img;
        int v = 0;
        while (in >> v) img.push_back(v);
        if (!in.eof()) throw std::invalid_argument("image table: expected integers");
        return Permutation(std::move(img));
    }
    for (char& c : s)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<int> seq;
    int v = 0;
    while (in >> v) seq.push_back(v);
    if (!in.eof()) throw std::invalid_argument("cycle notation: expected integers");
    return from_cycle_notation(seq).perm();
}

}  // namespace covperm
