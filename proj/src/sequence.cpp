#include "divseq/sequence.hpp"

#include <fstream>
#include <numeric>
#include <utility>

namespace divseq {

spec_error::spec_error(const std::string& message, std::size_t position)
    : std::runtime_error(position == std::string::npos
                             ? message
                             : message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

SequenceSpec SequenceSpec::identity() {
    SequenceSpec s;
    s.family_ = SequenceFamily::identity;
    s.label_ = "id";
    return s;
}

SequenceSpec SequenceSpec::fibonacci() {
    SequenceSpec s;
    s.family_ = SequenceFamily::fibonacci;
    s.label_ = "fib";
    return s;
}

SequenceSpec SequenceSpec::lucas(Index a, Index b) {
    if (a < 1 || b < 1)
        throw spec_error("lucas parameters must be positive (a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ")");
    if (std::gcd(a, b) != 1)
        throw spec_error("lucas requires gcd(a,b) = 1, got gcd(" + std::to_string(a) + "," +
                         std::to_string(b) + ") = " + std::to_string(std::gcd(a, b)));
    SequenceSpec s;
    s.family_ = SequenceFamily::lucas;
    s.a_ = a;
    s.b_ = b;
    s.label_ = "lucas:a=" + std::to_string(a) + ",b=" + std::to_string(b);
    return s;
}

SequenceSpec SequenceSpec::mersenne(Index x) {
    if (x < 2) throw spec_error("mersenne requires x >= 2, got x=" + std::to_string(x));
    SequenceSpec s;
    s.family_ = SequenceFamily::mersenne;
    s.x_ = x;
    s.label_ = "mersenne:x=" + std::to_string(x);
    return s;
}

SequenceSpec SequenceSpec::table(std::vector<ExactInt> values, std::string label) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].sign() <= 0)
            throw spec_error("table value at line " + std::to_string(i + 1) +
                             " must be positive, got " + values[i].to_string());
    }
    SequenceSpec s;
    s.family_ = SequenceFamily::table;
    s.table_ = std::move(values);
    s.label_ = std::move(label);
    return s;
}

bool SequenceSpec::operator==(const SequenceSpec& other) const {
    if (family_ != other.family_) return false;
    switch (family_) {
        case SequenceFamily::identity:
        case SequenceFamily::fibonacci:
            return true;
        case SequenceFamily::lucas:
            return a_ == other.a_ && b_ == other.b_;
        case SequenceFamily::mersenne:
            return x_ == other.x_;
        case SequenceFamily::table:
            return table_ == other.table_;
    }
    return false;
}

namespace {

// Parses "<name>=<positive int>" starting at `pos` in `text`; advances pos.
Index parse_named_int(const std::string& text, std::size_t& pos, const std::string& name) {
    if (text.compare(pos, name.size() + 1, name + "=") != 0)
        throw spec_error("expected '" + name + "='", pos);
    pos += name.size() + 1;
    std::size_t digits_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_start) throw spec_error("expected a decimal integer", digits_start);
    return static_cast<Index>(std::stoull(text.substr(digits_start, pos - digits_start)));
}

SequenceSpec parse_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open table file: " + path);
    std::vector<ExactInt> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty())
            throw spec_error("empty line " + std::to_string(line_no) + " in table file " + path);
        ExactInt v;
        try {
            v = ExactInt(line);
        } catch (const std::invalid_argument& e) {
            throw spec_error("table file " + path + " line " + std::to_string(line_no) + ": " +
                             e.what());
        }
        values.push_back(std::move(v));
    }
    if (values.empty()) throw spec_error("table file is empty: " + path);
    return SequenceSpec::table(std::move(values), "table:" + path);
}

}  // namespace

SequenceSpec parse_spec(const std::string& text) {
    if (text == "id") return SequenceSpec::identity();
    if (text == "fib") return SequenceSpec::fibonacci();
    if (text.rfind("lucas:", 0) == 0) {
        std::size_t pos = 6;
        Index a = parse_named_int(text, pos, "a");
        if (pos >= text.size() || text[pos] != ',') throw spec_error("expected ','", pos);
        ++pos;
        Index b = parse_named_int(text, pos, "b");
        if (pos != text.size()) throw spec_error("trailing characters", pos);
        return SequenceSpec::lucas(a, b);
    }
    if (text.rfind("mersenne:", 0) == 0) {
        std::size_t pos = 9;
        Index x = parse_named_int(text, pos, "x");
        if (pos != text.size()) throw spec_error("trailing characters", pos);
        return SequenceSpec::mersenne(x);
    }
    if (text.rfind("table:", 0) == 0) {
        std::string path = text.substr(6);
        if (path.empty()) throw spec_error("expected a file path", 6);
        return parse_table_file(path);
    }
    throw spec_error("unknown sequence spec '" + text +
                         "' (expected id, fib, lucas:a=..,b=.., mersenne:x=.., table:<path>)",
                     0);
}

std::vector<ExactInt> terms_range(const SequenceSpec& spec, Index lo, Index hi) {
    if (lo < 1) throw std::domain_error("terms_range: indices start at 1");
    if (lo > hi) throw std::domain_error("terms_range: lo exceeds hi");
    std::vector<ExactInt> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    switch (spec.family()) {
        case SequenceFamily::identity:
            for (Index n = lo; n <= hi; ++n) out.push_back(ExactInt(static_cast<unsigned long>(n)));
            break;
        case SequenceFamily::fibonacci:
        case SequenceFamily::lucas: {
            ExactInt mul_prev(spec.family() == SequenceFamily::lucas ? spec.lucas_a() : 1);
            ExactInt mul_prev2(spec.family() == SequenceFamily::lucas ? spec.lucas_b() : 1);
            ExactInt prev2(1);                                            // a_1
            ExactInt prev = spec.family() == SequenceFamily::lucas
                                ? ExactInt(static_cast<unsigned long>(spec.lucas_a()))
                                : ExactInt(1);                            // a_2
            if (lo == 1) out.push_back(prev2);
            if (lo <= 2 && hi >= 2) out.push_back(prev);
            for (Index n = 3; n <= hi; ++n) {
                ExactInt next = mul_prev * prev + mul_prev2 * prev2;
                prev2 = std::move(prev);
                prev = std::move(next);
                if (n >= lo) out.push_back(prev);
            }
            break;
        }
        case SequenceFamily::mersenne: {
            ExactInt x(static_cast<unsigned long>(spec.mersenne_x()));
            ExactInt power = pow(x, static_cast<unsigned long>(lo));
            for (Index n = lo; n <= hi; ++n) {
                out.push_back(power - ExactInt(1));
                if (n < hi) power *= x;
            }
            break;
        }
        case SequenceFamily::table: {
            if (hi > spec.table_values().size())
                throw std::domain_error("index " + std::to_string(hi) +
                                        " beyond table of length " +
                                        std::to_string(spec.table_values().size()));
            for (Index n = lo; n <= hi; ++n)
                out.push_back(spec.table_values()[static_cast<std::size_t>(n - 1)]);
            break;
        }
    }
    return out;
}

ExactInt term(const SequenceSpec& spec, Index n) {
    if (n < 1) throw std::domain_error("term: indices start at 1");
    switch (spec.family()) {
        case SequenceFamily::identity:
            return ExactInt(static_cast<unsigned long>(n));
        case SequenceFamily::mersenne:
            return pow(ExactInt(static_cast<unsigned long>(spec.mersenne_x())),
                       static_cast<unsigned long>(n)) -
                   ExactInt(1);
        case SequenceFamily::table:
            if (n > spec.table_values().size())
                throw std::domain_error("index " + std::to_string(n) + " beyond table of length " +
                                        std::to_string(spec.table_values().size()));
            return spec.table_values()[static_cast<std::size_t>(n - 1)];
        case SequenceFamily::fibonacci:
        case SequenceFamily::lucas:
            return terms_range(spec, n, n).front();
    }
    throw std::logic_error("term: unhandled family");
}

TermCache::TermCache(SequenceSpec spec) : spec_(std::move(spec)) {}

void TermCache::ensure(Index n) {
    if (n <= terms_.size()) return;
    Index lo = terms_.size() + 1;
    std::vector<ExactInt> more;
    if (lo <= 2 || spec_.family() == SequenceFamily::identity ||
        spec_.family() == SequenceFamily::table || spec_.family() == SequenceFamily::mersenne) {
        more = terms_range(spec_, lo, n);
    } else {
        // Recurrence families restart from the two cached predecessors.
        ExactInt mul_prev(spec_.family() == SequenceFamily::lucas ? spec_.lucas_a() : 1);
        ExactInt mul_prev2(spec_.family() == SequenceFamily::lucas ? spec_.lucas_b() : 1);
        ExactInt prev2 = terms_[terms_.size() - 2];
        ExactInt prev = terms_[terms_.size() - 1];
        for (Index k = lo; k <= n; ++k) {
            ExactInt next = mul_prev * prev + mul_prev2 * prev2;
            prev2 = std::move(prev);
            prev = std::move(next);
            more.push_back(prev);
        }
    }
    for (auto& v : more) terms_.push_back(std::move(v));
}

const ExactInt& TermCache::at(Index n) {
    if (n < 1) throw std::domain_error("term: indices start at 1");
    ensure(n);
    return terms_[static_cast<std::size_t>(n - 1)];
}

}  // namespace divseq
