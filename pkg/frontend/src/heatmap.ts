/**
 * P/N heatmap model over the grid export. Highlighted cells are exactly the
 * server's p_positions; for a P cell the model also reports its pair index
 * (n, a, b) so hovering can show the closed-form identity.
 */

import type { GridView } from './api.js'

export interface CellIdentity {
  n: number
  a: number
  b: number
}

export class HeatmapModel {
  readonly nMax: number
  private readonly pKeys: Set<number>
  private readonly identities: Map<number, CellIdentity>

  constructor(grid: GridView) {
    this.nMax = grid.n_max
    this.pKeys = new Set()
    this.identities = new Map()
    const stride = grid.n_max + 1
    const ordered = grid.p_positions
      .filter(([x, y]) => x <= y)
      .sort((p, q) => p[0] - q[0])
    ordered.forEach(([a, b], n) => {
      const identity = { n, a, b }
      this.identities.set(a * stride + b, identity)
      this.identities.set(b * stride + a, identity)
    })
    for (const [x, y] of grid.p_positions) {
      this.pKeys.add(x * stride + y)
    }
  }

  /** total number of cells rendered, (n_max + 1)^2 */
  get cellCount(): number {
    return (this.nMax + 1) * (this.nMax + 1)
  }

  isP(x: number, y: number): boolean {
    return this.pKeys.has(x * (this.nMax + 1) + y)
  }

  /** all highlighted cells, lexicographic */
  pCells(): [number, number][] {
    const cells: [number, number][] = []
    for (const key of this.pKeys) {
      cells.push([Math.floor(key / (this.nMax + 1)), key % (this.nMax + 1)])
    }
    cells.sort((p, q) => p[0] - q[0] || p[1] - q[1])
    return cells
  }

  /** closed-form identity of a highlighted cell, else null */
  identity(x: number, y: number): CellIdentity | null {
    return this.identities.get(x * (this.nMax + 1) + y) ?? null
  }
}

export function buildHeatmap(grid: GridView): HeatmapModel {
  return new HeatmapModel(grid)
}
