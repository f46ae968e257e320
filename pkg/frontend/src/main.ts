/** Bootstrap: wire the controller to the static page. */

import { GameApi } from './api.js'
import { GameController } from './controller.js'
import { parseAmounts } from './composer.js'
import { renderBoard, renderHistory, renderStatus } from './board.js'

const PRESETS: Record<string, string> = {
  'π': 'pi',
  'e': 'e',
  '2+√2': 'surd:(2+1*sqrt(2))/1',
  '1+√3': 'surd:(1+1*sqrt(3))/1',
}

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id)
  if (!el) throw new Error(`missing #${id}`)
  return el as T
}

export function boot(): void {
  const api = new GameApi('')
  const boardEl = byId<HTMLDivElement>('board')
  const statusEl = byId<HTMLPreElement>('status')
  const historyEl = byId<HTMLDivElement>('history')

  const controller = new GameController(api, (state) => {
    renderStatus(statusEl, state)
    renderHistory(historyEl, state)
    renderBoard(boardEl, state, {
      onCompose: (move) => void controller.playMove(move).then(refreshOverlay),
      onExplore: (start) => {
        const beta = currentBeta()
        void controller.newGame(beta, start.x, start.y, side()).then(refreshOverlay)
      },
    })
  })

  const presetEl = byId<HTMLSelectElement>('preset')
  for (const label of Object.keys(PRESETS)) {
    const option = document.createElement('option')
    option.value = label
    option.textContent = label
    presetEl.appendChild(option)
  }
  const customEl = byId<HTMLInputElement>('custom-beta')
  const sideEl = byId<HTMLSelectElement>('side')
  const nMaxEl = byId<HTMLInputElement>('n-max')
  const startXEl = byId<HTMLInputElement>('start-x')
  const startYEl = byId<HTMLInputElement>('start-y')

  const currentBeta = (): string =>
    customEl.value.trim() || PRESETS[presetEl.value] || 'pi'
  const side = (): 'first' | 'second' => (sideEl.value === 'first' ? 'first' : 'second')

  const refreshOverlay = async (): Promise<void> => {
    await controller.loadHeatmap(currentBeta(), Number(nMaxEl.value) || 30)
  }

  byId<HTMLButtonElement>('new-game').addEventListener('click', () => {
    void controller
      .newGame(currentBeta(), Number(startXEl.value) || 0, Number(startYEl.value) || 0, side())
      .then(refreshOverlay)
  })
  byId<HTMLButtonElement>('explore').addEventListener('click', () => void refreshOverlay())
  byId<HTMLButtonElement>('hint').addEventListener('click', () => void controller.refreshHint())

  const moveInput = byId<HTMLInputElement>('move-input')
  byId<HTMLButtonElement>('move-send').addEventListener('click', () => {
    const move = parseAmounts(moveInput.value)
    if (move) void controller.playMove(move)
  })

  void refreshOverlay()
}

if (typeof document !== 'undefined' && document.getElementById('board')) {
  boot()
}
