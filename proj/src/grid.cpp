#include "wavesrc/grid.hpp"

#include <cmath>
#include <sstream>

#include "wavesrc/errors.hpp"

namespace wavesrc {

GridSpec make_grid(double length, double horizon, int space_cells,
                   int time_steps, double wave_speed) {
  if (!(length > 0.0) || !(horizon > 0.0) || !(wave_speed > 0.0) ||
      !std::isfinite(length) || !std::isfinite(horizon) ||
      !std::isfinite(wave_speed)) {
    throw Error(ErrorCode::kInvalidDimension,
                "length, horizon and wave speed must be positive and finite");
  }
  if (space_cells < 2 || time_steps < 1) {
    std::ostringstream msg;
    msg << "need at least 2 space cells and 1 time step, got M="
        << space_cells << " N=" << time_steps;
    throw Error(ErrorCode::kInvalidDimension, msg.str());
  }

  GridSpec grid;
  grid.length_ = length;
  grid.horizon_ = horizon;
  grid.space_cells_ = space_cells;
  grid.time_steps_ = time_steps;
  grid.wave_speed_ = wave_speed;
  grid.dx_ = length / space_cells;
  grid.dt_ = horizon / time_steps;
  grid.courant_ = wave_speed * grid.dt_ / grid.dx_;

  // r == 1 is the stability limit and is allowed. The slack absorbs
  // rounding in c*dt/dx for configurations that are exactly r = 1.
  if (grid.courant_ > 1.0 + 1e-14) {
    std::ostringstream msg;
    msg << "explicit scheme unstable: r = c*dt/dx = " << grid.courant_
        << " > 1";
    throw Error(ErrorCode::kCflViolation, msg.str());
  }
  return grid;
}

}  // namespace wavesrc
