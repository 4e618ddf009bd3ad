#include "hilb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hilb {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&] { throw std::invalid_argument("Partition: cannot parse '" + text + "'"); };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) fail();
            long v = std::stol(text.substr(start, i - start));
            if (v <= 0 || v > 1000000) fail();
            parts.push_back(static_cast<int>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            fail();
        }
    }
    skip_ws();
    if (i != text.size()) fail();
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

bool Partition::contains(const Box& s) const {
    return s.column >= 1 && s.row >= 1 && s.row <= part(s.column);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]));
    for (int j = 1; j <= parts_[0]; ++j)
        conj[static_cast<size_t>(j - 1)] =
            static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                           [j](int p) { return p >= j; }));
    return Partition(std::move(conj));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // Descending lex within a size: the lex-larger partition comes first.
    return b.parts_ <=> a.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

DomRel dominance_compare(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) return DomRel::different_size;
    int len = std::max(mu.length(), lam.length());
    bool mu_below = true;   // partial sums of mu <= those of lam everywhere
    bool lam_below = true;
    long su = 0, sl = 0;
    for (int i = 1; i <= len; ++i) {
        su += mu.part(i);
        sl += lam.part(i);
        if (su > sl) mu_below = false;
        if (sl > su) lam_below = false;
    }
    if (mu_below && lam_below) return DomRel::equal;
    if (mu_below) return DomRel::less;
    if (lam_below) return DomRel::greater;
    return DomRel::incomparable;
}

BoxStats arm_leg(const Partition& lam, const Box& s) {
    if (!lam.contains(s))
        throw std::out_of_range("arm_leg: box " + std::to_string(s.column) + "," +
                                std::to_string(s.row) + " outside " + lam.str());
    Partition conj = lam.conjugate();
    BoxStats st;
    st.arm = lam.part(s.column) - s.row;
    st.leg = conj.part(s.row) - s.column;
    st.coarm = s.row - 1;
    st.coleg = s.column - 1;
    return st;
}

std::vector<Box> boxes(const Partition& lam) {
    std::vector<Box> bs;
    bs.reserve(static_cast<size_t>(lam.size()));
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) bs.push_back(Box{i, j});
    return bs;
}

long n_stat(const Partition& lam) {
    long n = 0;
    for (int i = 1; i <= lam.length(); ++i) n += static_cast<long>(i - 1) * lam.part(i);
    return n;
}

mpz_class z_stat(const Partition& lam) {
    mpz_class z = 1;
    int i = 1;
    while (i <= lam.length()) {
        int v = lam.part(i);
        int mult = 0;
        while (i <= lam.length() && lam.part(i) == v) { ++mult; ++i; }
        for (int t = 0; t < mult; ++t) z *= v;
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(mult));
        z *= fact;
    }
    return z;
}

namespace {

void enumerate_rec(int n, int maxpart, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(int n) {
    if (n < 0 || n > enumerate_bound)
        throw std::invalid_argument("enumerate: n out of range");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

std::vector<std::pair<Partition, Box>> add_box_targets(const Partition& mu) {
    std::vector<std::pair<Partition, Box>> out;
    for (int i = 1; i <= mu.length() + 1; ++i) {
        // Column i can grow iff it stays no taller than column i - 1.
        if (i > 1 && mu.part(i) + 1 > mu.part(i - 1)) continue;
        std::vector<int> parts = mu.parts();
        if (i <= mu.length()) {
            parts[static_cast<size_t>(i - 1)] += 1;
        } else {
            parts.push_back(1);
        }
        out.emplace_back(Partition(std::move(parts)), Box{i, mu.part(i) + 1});
    }
    return out;
}

bool is_single_box_cover(const Partition& mu, const Partition& lam) {
    if (lam.size() != mu.size() + 1) return false;
    int grew = 0;
    for (int i = 1; i <= lam.length(); ++i) {
        int d = lam.part(i) - mu.part(i);
        if (d < 0) return false;
        if (d == 1) ++grew;
        if (d > 1) return false;
    }
    return grew == 1;
}

Box added_box(const Partition& mu, const Partition& lam) {
    if (!is_single_box_cover(mu, lam))
        throw std::invalid_argument("added_box: " + lam.str() + " does not cover " + mu.str());
    for (int i = 1; i <= lam.length(); ++i)
        if (lam.part(i) != mu.part(i)) return Box{i, lam.part(i)};
    throw std::logic_error("added_box: unreachable");
}

std::vector<Box> pieri_R(const Partition& mu, const Partition& lam) {
    Box nb = added_box(mu, lam);
    std::vector<Box> r;
    for (int i = 1; i <= mu.length(); ++i) {
        if (i == nb.column) continue;
        if (mu.part(i) >= nb.row) r.push_back(Box{i, nb.row});
    }
    return r;
}

}  // namespace hilb
