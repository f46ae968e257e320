/**
 * Typed client for the game service. The server is authoritative for every
 * legality verdict; this client only transports requests and surfaces the
 * server's error codes.
 */

export interface PositionView {
  x: number
  y: number
}

export interface MoveSpec {
  type: 'nim_x' | 'nim_y' | 'diagonal'
  t: number
  s?: number
}

export interface HistoryEntry {
  mover: 'human' | 'engine'
  move: MoveSpec
  position: PositionView
}

export interface LegalSummary {
  nim_x_max: number
  nim_y_max: number
  diagonal_allowed: boolean
  diagonal_width: number
}

export type SessionStatus = 'in_progress' | 'human_won' | 'engine_won'

export interface SessionView {
  id: string
  beta: string
  k: number
  engine_plays: 'first' | 'second'
  position: PositionView
  status: SessionStatus
  to_move: 'human' | null
  restricted: boolean
  legal_moves: LegalSummary
  history: HistoryEntry[]
}

export interface HintView {
  move: MoveSpec | null
  classification: 'P' | 'N'
}

export interface GridView {
  n_max: number
  p_positions: [number, number][]
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
    readonly reason?: string,
  ) {
    super(detail || code)
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>

async function parseError(response: Response): Promise<never> {
  let code = `HTTP ${response.status}`
  let detail = response.statusText
  let reason: string | undefined
  try {
    const body = await response.json()
    if (typeof body.error === 'string') code = body.error
    if (typeof body.detail === 'string') detail = body.detail
    if (typeof body.reason === 'string') reason = body.reason
  } catch {
    // non-JSON error body: keep the HTTP status text
  }
  throw new ApiError(response.status, code, detail, reason)
}

export class GameApi {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init)
    if (!response.ok) await parseError(response)
    return response.json() as Promise<T>
  }

  createSession(
    beta: string,
    x: number,
    y: number,
    enginePlays: 'first' | 'second',
  ): Promise<SessionView> {
    return this.request<SessionView>('/sessions', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ beta, x, y, engine_plays: enginePlays }),
    })
  }

  getSession(id: string): Promise<SessionView> {
    return this.request<SessionView>(`/sessions/${id}`)
  }

  submitMove(id: string, move: MoveSpec): Promise<SessionView> {
    return this.request<SessionView>(`/sessions/${id}/moves`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(move),
    })
  }

  hint(id: string): Promise<HintView> {
    return this.request<HintView>(`/sessions/${id}/hint`)
  }

  grid(beta: string, n: number): Promise<GridView> {
    return this.request<GridView>(`/grids?beta=${encodeURIComponent(beta)}&n=${n}`)
  }
}
