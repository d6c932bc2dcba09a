#include "galbrun/snapshot.hpp"

#include "galbrun/errors.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

namespace galbrun {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    if (snap.fields.empty()) throw structural_error("write_snapshot: no fields");
    const Grid2D& g = snap.fields.front().second.grid();
    for (const auto& [name, f] : snap.fields) {
        require_same_grid(snap.fields.front().second, f, "write_snapshot");
        if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
            throw structural_error("write_snapshot: bad field name '" + name + "'");
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw runtime_abort("write_snapshot: cannot open '" + path + "'");

    out << "GALBRUN-SNAPSHOT v1\n";
    out << "nx " << g.nx() << "\n";
    out << "ny " << g.ny() << "\n";
    out << "Lx " << fmt17(g.lx()) << "\n";
    out << "Ly " << fmt17(g.ly()) << "\n";
    out << "time " << fmt17(snap.time) << "\n";
    out << "fields";
    for (const auto& [name, f] : snap.fields) out << " " << name;
    out << "\n\n";

    for (const auto& [name, f] : snap.fields) {
        const auto& v = f.data();
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(double)));
    }
    if (!out) throw runtime_abort("write_snapshot: write failed for '" + path + "'");
}

Snapshot read_snapshot(const std::string& path, int order) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw runtime_abort("read_snapshot: cannot open '" + path + "'");

    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line))
            throw runtime_abort("read_snapshot: truncated header in '" + path + "'");
        return line;
    };

    if (next_line() != "GALBRUN-SNAPSHOT v1")
        throw runtime_abort("read_snapshot: bad magic in '" + path + "'");

    int nx = 0, ny = 0;
    double lx = 0, ly = 0, time = 0;
    std::vector<std::string> names;
    auto expect = [&](const std::string& key) {
        std::istringstream ss(next_line());
        std::string k;
        ss >> k;
        if (k != key)
            throw runtime_abort("read_snapshot: expected '" + key + "', got '" + k + "'");
        return ss;
    };
    expect("nx") >> nx;
    expect("ny") >> ny;
    expect("Lx") >> lx;
    expect("Ly") >> ly;
    expect("time") >> time;
    {
        auto ss = expect("fields");
        std::string n;
        while (ss >> n) names.push_back(n);
    }
    if (!next_line().empty())
        throw runtime_abort("read_snapshot: missing blank separator in '" + path + "'");
    if (names.empty()) throw runtime_abort("read_snapshot: no fields listed in '" + path + "'");

    Snapshot snap;
    snap.time = time;
    snap.order = order;
    GridPtr grid = make_grid(nx, ny, lx, ly, order);
    for (const auto& name : names) {
        ScalarField f(grid);
        in.read(reinterpret_cast<char*>(f.data().data()),
                static_cast<std::streamsize>(f.data().size() * sizeof(double)));
        if (in.gcount() != static_cast<std::streamsize>(f.data().size() * sizeof(double)))
            throw runtime_abort("read_snapshot: truncated payload in '" + path + "'");
        snap.fields.emplace_back(name, std::move(f));
    }
    return snap;
}

} // namespace galbrun
