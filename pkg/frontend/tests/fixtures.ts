import type { GridView } from '../src/api.js'

// /grids?beta=pi&n=30, frozen from a brute-force solve of the 31x31 grid
// (also equals the closed-form pairs (floor(n*alpha), floor(n*beta)) with
// floor(n*beta) <= 30, i.e. n = 0..9, plus mirrors)
export const PI_GRID_30: GridView = {
  n_max: 30,
  p_positions: [
    [0, 0],
    [1, 3], [2, 6], [3, 1], [4, 9], [5, 12], [6, 2], [7, 15], [8, 18],
    [9, 4], [10, 21], [11, 25], [12, 5], [13, 28], [15, 7], [18, 8],
    [21, 10], [25, 11], [28, 13],
  ],
}
