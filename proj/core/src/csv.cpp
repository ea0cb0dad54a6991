#include "offres/csv.hpp"

#include <charconv>
#include <cmath>
#include <complex>

#include "offres/format.hpp"

namespace offres {

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

void write_jump_records_csv(std::ostream& out,
                            std::span<const JumpRecord> records) {
    out << "trajectory_id,time,kind\n";
    for (std::size_t id = 0; id < records.size(); ++id) {
        for (const auto& event : records[id].events) {
            out << id << ',' << format_double(event.time) << ','
                << (event.kind == JumpKind::Up ? "up" : "down") << '\n';
        }
    }
}

void write_biphoton_grid_csv(std::ostream& out, const BiphotonGrid& grid) {
    out << (grid.axis == BiphotonGrid::Axis::Time ? "tau" : "omega")
        << ",re,im,abs2\n";
    for (std::size_t i = 0; i < grid.axis_values.size(); ++i) {
        const auto& v = grid.values[i];
        out << format_double(grid.axis_values[i]) << ','
            << format_double(v.real()) << ',' << format_double(v.imag()) << ','
            << format_double(std::norm(v)) << '\n';
    }
}

void write_bloch_series_csv(std::ostream& out,
                            std::span<const BlochSample> series) {
    out << "t,rho_ee,re_rho_ge,im_rho_ge\n";
    for (const auto& sample : series) {
        const auto ge = sample.rho.rho_ge();
        out << format_double(sample.t) << ','
            << format_double(sample.rho.rho_ee()) << ','
            << format_double(ge.real()) << ',' << format_double(ge.imag())
            << '\n';
    }
}

}  // namespace offres
