#include "fourierve/uai_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "fourierve/error.hpp"

namespace fve {

namespace {

class Tokenizer {
public:
    explicit Tokenizer(std::string_view text) : text_(text) {}

    /// Next token, or throws CountMismatch naming what was expected.
    std::string_view next(const char* expected) {
        skip_space();
        if (pos_ >= text_.size())
            throw CountMismatch(std::string("unexpected end of input, expected ") + expected);
        start_ = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
        return text_.substr(start_, pos_ - start_);
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    std::size_t token_start() const { return start_; }
    std::size_t position() const { return pos_; }

    long long integer(const char* expected) {
        auto tok = next(expected);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw SyntaxError("expected " + std::string(expected) + ", got '" + std::string(tok) + "'",
                              start_);
        return value;
    }

    long long non_negative(const char* expected) {
        const long long v = integer(expected);
        if (v < 0) throw SyntaxError(std::string(expected) + " must be nonnegative", start_);
        return v;
    }

    double real(const char* expected) {
        auto tok = next(expected);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw SyntaxError("expected " + std::string(expected) + ", got '" + std::string(tok) + "'",
                              start_);
        return value;
    }

private:
    static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t start_ = 0;
};

}  // namespace

UaiDocument parse_uai(std::string_view text) {
    Tokenizer tok(text);
    UaiDocument doc;

    const auto preamble = tok.next("network type");
    if (preamble == "MARKOV")
        doc.network_type = NetworkType::Markov;
    else if (preamble == "BAYES")
        doc.network_type = NetworkType::Bayes;
    else
        throw SyntaxError("expected MARKOV or BAYES, got '" + std::string(preamble) + "'",
                          tok.token_start());

    const auto num_vars = tok.non_negative("variable count");
    doc.cardinalities.reserve(static_cast<std::size_t>(std::min(num_vars, 1LL << 20)));
    for (long long i = 0; i < num_vars; ++i) {
        const auto card = tok.integer("cardinality");
        if (card <= 0) throw SyntaxError("cardinality must be positive", tok.token_start());
        if (card != 2)
            throw CardinalityUnsupported("variable " + std::to_string(i) + " has cardinality " +
                                         std::to_string(card) + "; only binary variables are supported");
        doc.cardinalities.push_back(static_cast<int>(card));
    }

    const auto num_factors = tok.non_negative("factor count");
    for (long long i = 0; i < num_factors; ++i) {
        const auto arity = tok.non_negative("scope size");
        if (arity > 62) throw SyntaxError("scope size too large", tok.token_start());
        std::vector<VarId> scope;
        std::unordered_set<VarId> seen;
        for (long long j = 0; j < arity; ++j) {
            const auto v = tok.non_negative("variable id");
            if (v >= num_vars)
                throw SyntaxError("variable id " + std::to_string(v) + " out of range", tok.token_start());
            if (!seen.insert(static_cast<VarId>(v)).second)
                throw SyntaxError("duplicate variable in scope", tok.token_start());
            scope.push_back(static_cast<VarId>(v));
        }
        doc.factor_scopes.push_back(std::move(scope));
    }

    for (long long i = 0; i < num_factors; ++i) {
        const auto& scope = doc.factor_scopes[static_cast<std::size_t>(i)];
        const auto count = tok.non_negative("table size");
        const long long expected = 1LL << scope.size();
        if (count != expected)
            throw CountMismatch("factor " + std::to_string(i) + " declares " + std::to_string(count) +
                                " entries, scope requires " + std::to_string(expected));
        std::vector<double> table;
        table.reserve(static_cast<std::size_t>(count));
        for (long long j = 0; j < count; ++j) {
            const double value = tok.real("table value");
            if (!std::isfinite(value) || value < 0.0)
                throw SyntaxError("table values must be finite and nonnegative", tok.token_start());
            table.push_back(value);
        }
        doc.factor_tables.push_back(std::move(table));
    }

    if (!tok.at_end()) {
        tok.next("");
        throw SyntaxError("trailing data after the last table", tok.token_start());
    }
    return doc;
}

GraphicalModel to_model(const UaiDocument& doc) {
    for (std::size_t i = 0; i < doc.cardinalities.size(); ++i)
        if (doc.cardinalities[i] != 2)
            throw CardinalityUnsupported("variable " + std::to_string(i) + " is not binary");
    if (doc.factor_scopes.size() != doc.factor_tables.size())
        throw CountMismatch("scope and table counts differ");

    std::vector<DenseTable> factors;
    factors.reserve(doc.factor_scopes.size());
    for (std::size_t i = 0; i < doc.factor_scopes.size(); ++i) {
        const auto& scope = doc.factor_scopes[i];
        const auto& table = doc.factor_tables[i];
        const std::size_t k = scope.size();
        if (table.size() != (std::size_t{1} << k))
            throw CountMismatch("factor " + std::to_string(i) + " has the wrong table size");
        // UAI row index: scope[0] is the most significant digit.
        std::vector<double> values(table.size());
        for (std::size_t row = 0; row < table.size(); ++row) {
            std::size_t m = 0;
            for (std::size_t j = 0; j < k; ++j)
                if ((row >> (k - 1 - j)) & 1U) m |= std::size_t{1} << j;
            values[m] = table[row];
        }
        factors.emplace_back(scope, std::move(values));
    }
    return GraphicalModel(doc.cardinalities.size(), std::move(factors));
}

Evidence parse_evidence(std::string_view text) {
    Tokenizer tok(text);
    Evidence e;
    const auto count = tok.non_negative("evidence count");
    for (long long i = 0; i < count; ++i) {
        const auto v = tok.non_negative("variable id");
        const auto state = tok.integer("state");
        if (state != 0 && state != 1)
            throw SyntaxError("evidence state must be 0 or 1", tok.token_start());
        if (v > std::numeric_limits<VarId>::max())
            throw SyntaxError("variable id out of range", tok.token_start());
        e.set(static_cast<VarId>(v), state == 1 ? 1 : -1);
    }
    if (!tok.at_end()) {
        tok.next("");
        throw SyntaxError("trailing data after evidence", tok.token_start());
    }
    return e;
}

std::string write_uai(const GraphicalModel& m) {
    if (!m.fixed().empty())
        throw InvalidParams("write_uai: models with fixed variables cannot be written");
    if (m.log10_scale() != 0.0)
        throw InvalidParams("write_uai: nonzero log10 scale cannot be written");

    std::ostringstream out;
    out << "MARKOV\n" << m.num_vars() << '\n';
    for (std::size_t i = 0; i < m.num_vars(); ++i) out << (i ? " " : "") << 2;
    out << '\n' << m.factors().size() << '\n';
    for (const auto& f : m.factors()) {
        out << f.arity();
        for (VarId v : f.scope()) out << ' ' << v;
        out << '\n';
    }
    char buf[40];
    for (const auto& f : m.factors()) {
        const std::size_t k = f.arity();
        out << '\n' << f.size() << '\n';
        for (std::size_t row = 0; row < f.size(); ++row) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < k; ++j)
                if ((row >> (k - 1 - j)) & 1U) idx |= std::size_t{1} << j;
            std::snprintf(buf, sizeof buf, "%.17g", f[idx]);
            out << ' ' << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace fve
