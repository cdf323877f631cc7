// The A-infinity module of the (p,1)-cable pattern, presented by six
// parametric relation families (Delta_A is the filtration shift):
//   m_{3+i}(a, r3, r23^i, r2)          = a,          Delta = p*i + p
//   m_{4+i+j}(a, r3, r23^i, r2, r12^j, r1) = b_{j+1}, Delta = p*i + j + 1, j <= p-2
//   m_{2+j}(a, r12^j, r1)              = b_{2p-j-2}, Delta = 0,           j <= p-2
//   m_1(b_j)                           = b_{2p-j-1}, Delta = p - j,   1 <= j <= p-1
//   m_{3+i}(b_j, r2, r12^i, r1)        = b_{j+i+1},  Delta = i + 1,   1 <= j <= p-2, i <= p-j-2
//   m_{3+i}(b_j, r2, r12^i, r1)        = b_{j-i-1},  Delta = 0,   p+1 <= j <= 2p-2, i <= j-p-1
#include <algorithm>
#include <map>
#include <sstream>

#include "cabletau/bordered.hpp"
#include "cabletau/errors.hpp"

namespace cabletau {

namespace {

using Labels = std::vector<ReebLabel>;

// Parses L as (first, mid^i, rest...) run-length style helpers.
int count_run(const Labels& l, size_t from, ReebLabel r) {
    int n = 0;
    while (from + n < l.size() && l[from + n] == r) ++n;
    return n;
}

}  // namespace

int TypeAModule::index_of(const std::string& id) const {
    for (int i = 0; i < int(gens.size()); ++i)
        if (gens[i].first == id) return i;
    return -1;
}

TypeAModule TypeAModule::from_relations(std::vector<std::pair<std::string, Idempotent>> gens,
                                        std::vector<TypeARelation> relations) {
    TypeAModule m;
    m.gens = std::move(gens);
    m.explicit_ = std::move(relations);
    return m;
}

TypeAModule cfa_p1(int p) {
    if (p < 2) throw Error("cfa_p1 requires p >= 2");
    TypeAModule m;
    m.p_ = p;
    m.gens.push_back({"a", Idempotent::i1});
    for (int j = 1; j <= 2 * p - 2; ++j)
        m.gens.push_back({"b" + std::to_string(j), Idempotent::i2});
    return m;
}

std::vector<std::pair<int, int>> TypeAModule::relations_matching(int input,
                                                                 const Labels& labels) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : explicit_)
        if (index_of(r.input) == input && r.labels == labels)
            out.push_back({index_of(r.output), r.delta_a});
    if (p_ == 0) return out;

    const int p = p_;
    const std::string& id = gens[input].first;
    auto b_index = [this](int j) { return index_of("b" + std::to_string(j)); };

    if (id == "a") {
        if (labels.empty()) return out;
        if (labels[0] == ReebLabel::r3) {
            size_t pos = 1;
            int i = count_run(labels, pos, ReebLabel::r23);
            pos += i;
            if (pos < labels.size() && labels[pos] == ReebLabel::r2) {
                ++pos;
                if (pos == labels.size()) {
                    out.push_back({input, p * i + p});  // family 1
                    return out;
                }
                int j = count_run(labels, pos, ReebLabel::r12);
                pos += j;
                if (j <= p - 2 && pos + 1 == labels.size() && labels[pos] == ReebLabel::r1)
                    out.push_back({b_index(j + 1), p * i + j + 1});  // family 2
            }
        } else {
            int j = count_run(labels, 0, ReebLabel::r12);
            if (j <= p - 2 && size_t(j) + 1 == labels.size() && labels[j] == ReebLabel::r1)
                out.push_back({b_index(2 * p - j - 2), 0});  // family 3
        }
        return out;
    }

    // b_j input
    int j = std::stoi(id.substr(1));
    if (labels.empty()) {
        if (1 <= j && j <= p - 1) out.push_back({b_index(2 * p - j - 1), p - j});  // family 4
        return out;
    }
    if (labels[0] != ReebLabel::r2) return out;
    int i = count_run(labels, 1, ReebLabel::r12);
    if (size_t(i) + 2 != labels.size() || labels.back() != ReebLabel::r1) return out;
    if (1 <= j && j <= p - 2 && i <= p - j - 2)
        out.push_back({b_index(j + i + 1), i + 1});  // family 5
    if (p + 1 <= j && j <= 2 * p - 2 && i <= j - p - 1)
        out.push_back({b_index(j - i - 1), 0});  // family 6
    return out;
}

bool TypeAModule::prefix_matchable(int input, const Labels& labels) const {
    if (labels.empty()) return true;
    for (const auto& r : explicit_) {
        if (index_of(r.input) != input) continue;
        if (r.labels.size() < labels.size()) continue;
        if (std::equal(labels.begin(), labels.end(), r.labels.begin())) return true;
    }
    if (p_ == 0) return false;

    const int p = p_;
    const std::string& id = gens[input].first;
    if (id == "a") {
        if (labels[0] == ReebLabel::r3) {
            size_t pos = 1;
            pos += count_run(labels, pos, ReebLabel::r23);
            if (pos == labels.size()) return true;
            if (labels[pos] != ReebLabel::r2) return false;
            ++pos;
            int j = count_run(labels, pos, ReebLabel::r12);
            if (j > p - 2) return false;
            pos += j;
            if (pos == labels.size()) return true;
            return labels[pos] == ReebLabel::r1 && pos + 1 == labels.size();
        }
        int j = count_run(labels, 0, ReebLabel::r12);
        if (j > p - 2) return false;
        if (size_t(j) == labels.size()) return true;
        return labels[j] == ReebLabel::r1 && size_t(j) + 1 == labels.size();
    }

    int j = std::stoi(id.substr(1));
    int max_i = -1;
    if (1 <= j && j <= p - 2) max_i = p - j - 2;
    if (p + 1 <= j && j <= 2 * p - 2) max_i = j - p - 1;
    if (max_i < 0) return false;
    if (labels[0] != ReebLabel::r2) return false;
    int i = count_run(labels, 1, ReebLabel::r12);
    if (i > max_i) return false;
    size_t pos = 1 + i;
    if (pos == labels.size()) return true;
    return labels[pos] == ReebLabel::r1 && pos + 1 == labels.size();
}

std::vector<TypeARelation> TypeAModule::enumerate(int max_labels) const {
    std::vector<TypeARelation> out;
    for (const auto& r : explicit_)
        if (int(r.labels.size()) <= max_labels) out.push_back(r);
    if (p_ == 0) return out;

    const int p = p_;
    auto b_name = [](int j) { return "b" + std::to_string(j); };
    Labels l;
    // family 1
    for (int i = 0; 2 + i <= max_labels; ++i) {
        l = {ReebLabel::r3};
        l.insert(l.end(), i, ReebLabel::r23);
        l.push_back(ReebLabel::r2);
        out.push_back({"a", l, "a", p * i + p});
    }
    // family 2
    for (int i = 0; 3 + i <= max_labels; ++i)
        for (int j = 0; j <= p - 2 && 3 + i + j <= max_labels; ++j) {
            l = {ReebLabel::r3};
            l.insert(l.end(), i, ReebLabel::r23);
            l.push_back(ReebLabel::r2);
            l.insert(l.end(), j, ReebLabel::r12);
            l.push_back(ReebLabel::r1);
            out.push_back({"a", l, b_name(j + 1), p * i + j + 1});
        }
    // family 3
    for (int j = 0; j <= p - 2 && j + 1 <= max_labels; ++j) {
        l.assign(j, ReebLabel::r12);
        l.push_back(ReebLabel::r1);
        out.push_back({"a", l, b_name(2 * p - j - 2), 0});
    }
    // family 4
    for (int j = 1; j <= p - 1; ++j)
        out.push_back({b_name(j), {}, b_name(2 * p - j - 1), p - j});
    // families 5 and 6
    for (int j = 1; j <= p - 2; ++j)
        for (int i = 0; i <= p - j - 2 && 2 + i <= max_labels; ++i) {
            l = {ReebLabel::r2};
            l.insert(l.end(), i, ReebLabel::r12);
            l.push_back(ReebLabel::r1);
            out.push_back({b_name(j), l, b_name(j + i + 1), i + 1});
        }
    for (int j = p + 1; j <= 2 * p - 2; ++j)
        for (int i = 0; i <= j - p - 1 && 2 + i <= max_labels; ++i) {
            l = {ReebLabel::r2};
            l.insert(l.end(), i, ReebLabel::r12);
            l.push_back(ReebLabel::r1);
            out.push_back({b_name(j), l, b_name(j - i - 1), 0});
        }
    return out;
}

std::vector<std::string> a_infinity_violations(const TypeAModule& m, int max_labels) {
    std::vector<std::string> violations;
    const std::array<ReebLabel, 6>& all = kReebLabels;

    for (int x = 0; x < int(m.gens.size()); ++x) {
        Labels seq;
        // DFS over composable sequences starting at the generator's idempotent.
        auto check_seq = [&](const Labels& s) {
            std::map<std::pair<int, int>, int> terms;
            // splittings: inner consumes the first t labels
            for (size_t t = 0; t <= s.size(); ++t) {
                Labels first(s.begin(), s.begin() + t), rest(s.begin() + t, s.end());
                for (auto [g1, d1] : m.relations_matching(x, first))
                    for (auto [g2, d2] : m.relations_matching(g1, rest))
                        terms[{g2, d1 + d2}] ^= 1;
            }
            // adjacent products
            for (size_t i = 0; i + 1 < s.size(); ++i) {
                AlgebraElement prod = multiply(element_of(s[i]), element_of(s[i + 1]));
                if (prod == AlgebraElement::zero) continue;
                Labels merged(s.begin(), s.begin() + i);
                switch (prod) {
                    case AlgebraElement::r12: merged.push_back(ReebLabel::r12); break;
                    case AlgebraElement::r23: merged.push_back(ReebLabel::r23); break;
                    case AlgebraElement::r123: merged.push_back(ReebLabel::r123); break;
                    default: throw InternalError("unexpected Reeb product");
                }
                merged.insert(merged.end(), s.begin() + i + 2, s.end());
                for (auto [g, d] : m.relations_matching(x, merged)) terms[{g, d}] ^= 1;
            }
            for (const auto& [key, parity] : terms)
                if (parity) {
                    std::ostringstream os;
                    os << "A-infinity condition fails at " << m.gens[x].first << " with "
                       << s.size() << " labels (";
                    for (ReebLabel r : s) os << to_string(r) << " ";
                    os << ") -> " << m.gens[key.first].first << " shift " << key.second;
                    violations.push_back(os.str());
                }
        };

        auto dfs = [&](auto&& self, Idempotent right) -> void {
            if (!seq.empty()) check_seq(seq);
            if (int(seq.size()) == max_labels) return;
            for (ReebLabel r : all) {
                if (left_idempotent(r) != right) continue;
                seq.push_back(r);
                self(self, right_idempotent(r));
                seq.pop_back();
            }
        };
        dfs(dfs, m.idempotent_of(x));
    }
    return violations;
}

}  // namespace cabletau
