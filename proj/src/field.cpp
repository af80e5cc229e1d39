#include "evac/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "evac/common.hpp"

namespace evac {

ScalarField make_scalar(const Grid& g, double fill) {
    ScalarField f;
    f.grid = g;
    f.v.assign(static_cast<std::size_t>(g.cells()), fill);
    return f;
}

VectorField make_vector(const Grid& g, double fx, double fy) {
    VectorField f;
    f.grid = g;
    f.x.assign(static_cast<std::size_t>(g.cells()), fx);
    f.y.assign(static_cast<std::size_t>(g.cells()), fy);
    return f;
}

void check_finite(const ScalarField& f, const char* what) {
    for (double x : f.v)
        require_state(std::isfinite(x), std::string(what) + ": non-finite cell");
}

void check_finite(const VectorField& f, const char* what) {
    for (double x : f.x)
        require_state(std::isfinite(x), std::string(what) + ": non-finite cell");
    for (double y : f.y)
        require_state(std::isfinite(y), std::string(what) + ": non-finite cell");
}

namespace {

void write_block(std::FILE* fp, const std::vector<double>& v, const Grid& g) {
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i)
            std::fprintf(fp, i ? ",%.17g" : "%.17g", v[g.idx(i, j)]);
        std::fputc('\n', fp);
    }
}

std::FILE* open_out(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    require_state(fp != nullptr, "cannot open for writing: " + path);
    return fp;
}

std::vector<double> read_block(std::istream& in, const Grid& g,
                               const std::string& path) {
    std::vector<double> v(static_cast<std::size_t>(g.cells()));
    std::string line;
    for (int j = 0; j < g.ny; ++j) {
        require_state(static_cast<bool>(std::getline(in, line)),
                      "truncated field CSV: " + path);
        std::istringstream row(line);
        std::string cell;
        for (int i = 0; i < g.nx; ++i) {
            require_state(static_cast<bool>(std::getline(row, cell, ',')),
                          "short row in field CSV: " + path);
            v[g.idx(i, j)] = std::stod(cell);
        }
    }
    return v;
}

}  // namespace

void write_csv(const ScalarField& f, const std::string& path) {
    std::FILE* fp = open_out(path);
    write_block(fp, f.v, f.grid);
    std::fclose(fp);
}

void write_csv(const VectorField& f, const std::string& path) {
    std::FILE* fp = open_out(path);
    write_block(fp, f.x, f.grid);
    std::fputc('\n', fp);
    write_block(fp, f.y, f.grid);
    std::fclose(fp);
}

ScalarField read_scalar_csv(const std::string& path, const Grid& g) {
    std::ifstream in(path);
    require_state(in.good(), "cannot open field CSV: " + path);
    ScalarField f;
    f.grid = g;
    f.v = read_block(in, g, path);
    return f;
}

VectorField read_vector_csv(const std::string& path, const Grid& g) {
    std::ifstream in(path);
    require_state(in.good(), "cannot open field CSV: " + path);
    VectorField f;
    f.grid = g;
    f.x = read_block(in, g, path);
    std::string blank;
    std::getline(in, blank);
    require_state(blank.empty(), "expected blank separator line: " + path);
    f.y = read_block(in, g, path);
    return f;
}

}  // namespace evac
