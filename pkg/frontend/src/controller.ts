/**
 * Game-flow state machine between the DOM layer and the API client.
 * At most one mutation request is in flight; input stays disabled while the
 * engine's reply is pending; every legality verdict comes from the server.
 */

import { ApiError, GameApi } from './api.js'
import type { GridView, HintView, MoveSpec, SessionView } from './api.js'

export interface GameState {
  session: SessionView | null
  grid: GridView | null
  hint: HintView | null
  error: string | null
  busy: boolean
}

export type Listener = (state: GameState) => void

export function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    if (err.reason === 'restriction-active') {
      return 'restriction active: a pile equals floor(beta*n) — nim moves only'
    }
    if (err.reason === 'diagonal-width') {
      return `diagonal too wide: |s - t| must stay below k (${err.detail})`
    }
    if (err.reason === 'out-of-bounds') {
      return `move out of bounds: ${err.detail}`
    }
    return `${err.code}: ${err.detail}`
  }
  return err instanceof Error ? err.message : String(err)
}

export class GameController {
  readonly state: GameState = { session: null, grid: null, hint: null, error: null, busy: false }

  constructor(
    private readonly api: GameApi,
    private readonly listener: Listener = () => {},
  ) {}

  private emit(): void {
    this.listener(this.state)
  }

  private async mutate<T>(work: () => Promise<T>, apply: (value: T) => void): Promise<boolean> {
    if (this.state.busy) return false
    this.state.busy = true
    this.state.error = null
    this.emit()
    try {
      apply(await work())
      return true
    } catch (err) {
      this.state.error = describeError(err)
      return false
    } finally {
      this.state.busy = false
      this.emit()
    }
  }

  /** create a session; when the engine moved first its reply is already inside */
  newGame(beta: string, x: number, y: number, side: 'first' | 'second'): Promise<boolean> {
    return this.mutate(
      () => this.api.createSession(beta, x, y, side),
      (session) => {
        this.state.session = session
        this.state.hint = null
      },
    )
  }

  /** submit the human move; the engine's answer arrives in the same response */
  playMove(move: MoveSpec): Promise<boolean> {
    const session = this.state.session
    if (!session || session.status !== 'in_progress') {
      this.state.error = 'no game in progress'
      this.emit()
      return Promise.resolve(false)
    }
    return this.mutate(
      () => this.api.submitMove(session.id, move),
      (updated) => {
        this.state.session = updated
        this.state.hint = null
      },
    )
  }

  refreshHint(): Promise<boolean> {
    const session = this.state.session
    if (!session) return Promise.resolve(false)
    return this.mutate(
      () => this.api.hint(session.id),
      (hint) => {
        this.state.hint = hint
      },
    )
  }

  /** fetch the P/N overlay for the explorer; capped client-side at n = 500 */
  loadHeatmap(beta: string, nMax: number): Promise<boolean> {
    const capped = Math.min(nMax, 500)
    return this.mutate(
      () => this.api.grid(beta, capped),
      (grid) => {
        this.state.grid = grid
      },
    )
  }
}
