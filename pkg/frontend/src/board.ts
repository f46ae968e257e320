/**
 * DOM rendering: heatmap board, move composer, history panel, banners.
 * Pure rendering over GameState; all game logic lives server-side.
 */

import type { GameState } from './controller.js'
import type { MoveSpec, PositionView } from './api.js'
import { HeatmapModel } from './heatmap.js'
import { deriveMove } from './composer.js'

export interface BoardCallbacks {
  onCompose: (move: MoveSpec) => void
  onExplore: (start: PositionView) => void
}

export function renderBoard(
  root: HTMLElement,
  state: GameState,
  callbacks: BoardCallbacks,
): void {
  root.textContent = ''
  const session = state.session
  const grid = state.grid
  if (!grid) return
  const model = new HeatmapModel(grid)
  const table = document.createElement('table')
  table.className = 'board'
  const current = session?.position ?? null

  for (let y = model.nMax; y >= 0; y--) {
    const row = document.createElement('tr')
    for (let x = 0; x <= model.nMax; x++) {
      const cell = document.createElement('td')
      cell.dataset.x = String(x)
      cell.dataset.y = String(y)
      if (model.isP(x, y)) {
        cell.classList.add('p-cell')
        const identity = model.identity(x, y)
        if (identity) {
          cell.title = `n=${identity.n}: (${identity.a}, ${identity.b})`
        }
      }
      if (current && current.x === x && current.y === y) {
        cell.classList.add('current')
      }
      cell.addEventListener('click', () => {
        if (session && session.status === 'in_progress' && current && !state.busy) {
          const move = deriveMove(current, { x, y })
          if (move) {
            callbacks.onCompose(move)
            return
          }
        }
        callbacks.onExplore({ x, y })
      })
      row.appendChild(cell)
    }
    table.appendChild(row)
  }
  root.appendChild(table)
}

export function renderStatus(root: HTMLElement, state: GameState): void {
  const session = state.session
  const lines: string[] = []
  if (state.error) lines.push(`⚠ ${state.error}`)
  if (session) {
    lines.push(`position (${session.position.x}, ${session.position.y})`)
    if (session.restricted && session.status === 'in_progress') {
      lines.push('restricted: a pile is in the beta sequence — nim moves only')
    }
    if (session.status === 'human_won') lines.push('you took the last token — you win!')
    if (session.status === 'engine_won') lines.push('the engine took the last token — it wins')
    if (state.hint) {
      lines.push(`classification: ${state.hint.classification}`)
    }
  }
  if (state.busy) lines.push('…')
  root.textContent = lines.join('\n')
}

export function renderHistory(root: HTMLElement, state: GameState): void {
  root.textContent = ''
  const session = state.session
  if (!session) return
  const list = document.createElement('ol')
  for (const entry of session.history) {
    const item = document.createElement('li')
    const mv = entry.move
    const what =
      mv.type === 'diagonal' ? `-(${mv.s}, ${mv.t})` : mv.type === 'nim_x' ? `x-${mv.t}` : `y-${mv.t}`
    item.textContent = `${entry.mover}: ${what} → (${entry.position.x}, ${entry.position.y})`
    list.appendChild(item)
  }
  root.appendChild(list)
}
