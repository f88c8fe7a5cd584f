#include "skewmm/matrix_io.hpp"

#include "skewmm/cyclotomic.hpp"
#include "skewmm/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace skewmm {

namespace {

constexpr std::string_view kMagic = "skewmm-matrix v1 p=";

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string serialize_matrix(int p, const RatMatrix& m)
{
    const auto n = static_cast<std::size_t>(p - 1);
    if (m.rows() != n || m.cols() != n)
        throw DimensionError("serialize_matrix: matrix is not (p-1)x(p-1)");
    std::string out(kMagic);
    out += std::to_string(p);
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0)
                out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

MatrixFile parse_matrix(std::string_view text)
{
    std::size_t line_no = 1;
    auto next_line = [&](std::string_view& line) {
        if (text.empty())
            return false;
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos)
            fail(line_no, "missing final newline");
        line = text.substr(0, nl);
        text.remove_prefix(nl + 1);
        return true;
    };

    std::string_view line;
    if (!next_line(line))
        fail(line_no, "empty input");
    if (line.substr(0, kMagic.size()) != kMagic)
        fail(line_no, "expected header \"skewmm-matrix v1 p=<prime>\"");
    const std::string_view p_text = line.substr(kMagic.size());
    int p = 0;
    const auto [ptr, ec] = std::from_chars(p_text.data(), p_text.data() + p_text.size(), p);
    if (ec != std::errc{} || ptr != p_text.data() + p_text.size() || p_text.empty() ||
        p_text.front() == '0' || p_text.front() == '+')
        fail(line_no, "malformed prime in header");
    if (p < 3 || !is_prime(p))
        fail(line_no, "p=" + std::to_string(p) + " is not an odd prime");

    const auto n = static_cast<std::size_t>(p - 1);
    MatrixFile file{p, RatMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        ++line_no;
        if (!next_line(line))
            fail(line_no, "expected " + std::to_string(n) + " matrix rows");
        std::size_t j = 0;
        std::size_t pos = 0;
        while (true) {
            const auto sp = line.find(' ', pos);
            const std::string_view tok = line.substr(pos, sp == std::string_view::npos ? sp : sp - pos);
            if (j >= n)
                fail(line_no, "too many entries");
            const auto value = parse_canonical_rational(tok);
            if (!value)
                fail(line_no, "entry " + std::to_string(j + 1) + " is not a canonical rational: \"" +
                                  std::string(tok) + "\"");
            file.matrix(i, j++) = *value;
            if (sp == std::string_view::npos)
                break;
            pos = sp + 1;
        }
        if (j != n)
            fail(line_no, "expected " + std::to_string(n) + " entries, got " + std::to_string(j));
    }
    if (!text.empty())
        fail(line_no + 1, "trailing content after matrix rows");
    return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("error reading " + path.string());
    try {
        return parse_matrix(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_matrix_file(const std::filesystem::path& path, int p, const RatMatrix& m)
{
    const std::string text = serialize_matrix(p, m);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("error writing " + path.string());
}

}  // namespace skewmm
