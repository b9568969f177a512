#include "apexlp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace apexlp {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

namespace {

struct LineReader {
    std::istream& in;
    std::size_t line_no = 0;

    // Next non-blank, non-comment line; false at end of input.
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            std::size_t pos = out.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (out[pos] == '#') continue;
            return true;
        }
        return false;
    }
};

std::vector<std::string_view> split_tokens(const std::string& line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) toks.emplace_back(line.data() + start, i - start);
    }
    return toks;
}

double parse_double(std::string_view tok, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "bad number '" + std::string(tok) + "'");
    }
    if (!std::isfinite(v)) {
        throw ParseError(line_no, "non-finite value '" + std::string(tok) + "'");
    }
    return v;
}

std::size_t parse_size(std::string_view tok, std::size_t line_no) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0) {
        throw ParseError(line_no, "bad dimension '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

void write_problem(const LpProblem& problem, std::ostream& out) {
    out << "LPF1\n" << problem.n << ' ' << problem.m << '\n';
    for (std::size_t i = 0; i < problem.m; ++i) {
        auto row = problem.row(i);
        for (std::size_t j = 0; j < problem.n; ++j) out << format_double(row[j]) << ' ';
        out << format_double(problem.b[i]) << '\n';
    }
    for (std::size_t j = 0; j < problem.n; ++j) {
        if (j) out << ' ';
        out << format_double(problem.c[j]);
    }
    out << '\n';
}

void write_problem_file(const LpProblem& problem, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_problem(problem, out);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

LpProblem read_problem(std::istream& in) {
    LineReader reader{in};
    std::string line;

    if (!reader.next(line) || split_tokens(line).size() != 1 || split_tokens(line)[0] != "LPF1") {
        throw ParseError(reader.line_no ? reader.line_no : 1, "expected 'LPF1' header");
    }

    if (!reader.next(line)) throw ParseError(reader.line_no + 1, "missing dimension line");
    auto dims = split_tokens(line);
    if (dims.size() != 2) throw ParseError(reader.line_no, "dimension line needs '<n> <m>'");
    const std::size_t n = parse_size(dims[0], reader.line_no);
    const std::size_t m = parse_size(dims[1], reader.line_no);

    std::vector<double> a(m * n);
    Vec b(m), c(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw ParseError(reader.line_no + 1,
                             "missing constraint row " + std::to_string(i + 1) + " of " +
                                 std::to_string(m));
        }
        auto toks = split_tokens(line);
        if (toks.size() != n + 1) {
            throw ParseError(reader.line_no, "constraint row needs " + std::to_string(n + 1) +
                                                 " values, got " + std::to_string(toks.size()));
        }
        bool all_zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = parse_double(toks[j], reader.line_no);
            if (a[i * n + j] != 0.0) all_zero = false;
        }
        b[i] = parse_double(toks[n], reader.line_no);
        if (all_zero) {
            throw ValidationError(ValidationIssue::ZeroRow, i,
                                  "constraint row " + std::to_string(i) + " is all zeros (line " +
                                      std::to_string(reader.line_no) + ")");
        }
    }

    if (!reader.next(line)) throw ParseError(reader.line_no + 1, "missing objective line");
    auto toks = split_tokens(line);
    if (toks.size() != n) {
        throw ParseError(reader.line_no, "objective line needs " + std::to_string(n) +
                                             " values, got " + std::to_string(toks.size()));
    }
    bool c_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = parse_double(toks[j], reader.line_no);
        if (c[j] != 0.0) c_zero = false;
    }
    if (c_zero) {
        throw ValidationError(ValidationIssue::ZeroObjective, 0,
                              "objective is all zeros (line " + std::to_string(reader.line_no) +
                                  ")");
    }

    return LpProblem::make(n, std::move(a), std::move(b), std::move(c));
}

LpProblem read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_problem(in);
}

void write_trace_csv(const SolveReport& report, std::ostream& out) {
    out << "k,objective,step_norm,proj_sweeps\n";
    for (const auto& rec : report.trace) {
        out << rec.k << ',' << format_double(rec.objective) << ',';
        if (rec.step_norm) out << format_double(*rec.step_norm);
        out << ',' << rec.proj_sweeps << '\n';
    }
}

}  // namespace apexlp
