#pragma once

#include <ostream>
#include <span>
#include <string>

#include "offres/biphoton.hpp"
#include "offres/bloch.hpp"
#include "offres/format.hpp"
#include "offres/trajectory.hpp"

namespace offres {

/// Jump events, one row per event: trajectory_id,time,kind.
void write_jump_records_csv(std::ostream& out,
                            std::span<const JumpRecord> records);

/// Grid rows: axis,re,im,abs2. The axis column is named tau or omega.
void write_biphoton_grid_csv(std::ostream& out, const BiphotonGrid& grid);

/// Time series rows: t,rho_ee,re_rho_ge,im_rho_ge.
void write_bloch_series_csv(std::ostream& out,
                            std::span<const BlochSample> series);

}  // namespace offres
