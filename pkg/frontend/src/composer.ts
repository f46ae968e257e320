/**
 * Two-click move composition: the player picks a target cell and the
 * composer derives the move that reaches it (or null when no single move
 * does). The server still has the final word on legality.
 */

import type { MoveSpec, PositionView } from './api.js'

export function deriveMove(from: PositionView, target: PositionView): MoveSpec | null {
  const dx = from.x - target.x
  const dy = from.y - target.y
  if (dx < 0 || dy < 0 || (dx === 0 && dy === 0)) return null
  if (dy === 0) return { type: 'nim_x', t: dx }
  if (dx === 0) return { type: 'nim_y', t: dy }
  return { type: 'diagonal', s: dx, t: dy }
}

export function applyMove(pos: PositionView, move: MoveSpec): PositionView {
  switch (move.type) {
    case 'nim_x':
      return { x: pos.x - move.t, y: pos.y }
    case 'nim_y':
      return { x: pos.x, y: pos.y - move.t }
    case 'diagonal':
      return { x: pos.x - (move.s ?? 0), y: pos.y - move.t }
  }
}

export function describeMove(move: MoveSpec): string {
  switch (move.type) {
    case 'nim_x':
      return `take ${move.t} from x`
    case 'nim_y':
      return `take ${move.t} from y`
    case 'diagonal':
      return `take ${move.s} from x and ${move.t} from y`
  }
}

/** textual fallback: "dx dy" amounts, mirroring the terminal client */
export function parseAmounts(text: string): MoveSpec | null {
  const parts = text.trim().split(/\s+/)
  if (parts.length !== 2) return null
  const dx = Number(parts[0])
  const dy = Number(parts[1])
  if (!Number.isInteger(dx) || !Number.isInteger(dy) || dx < 0 || dy < 0) return null
  if (dx > 0 && dy > 0) return { type: 'diagonal', s: dx, t: dy }
  if (dx > 0) return { type: 'nim_x', t: dx }
  if (dy > 0) return { type: 'nim_y', t: dy }
  return null
}
