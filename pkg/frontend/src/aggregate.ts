/**
 * Turn raw CSV rows into chart series. The only statistic computed here
 * is the arithmetic mean over seeds at each point.
 */

import { SchemaError, SweepRow, TraceRow } from './schema'

export interface Point {
  x: number
  y: number
}

export interface Series {
  label: string
  points: Point[]
}

export const mean = (values: number[]): number =>
  values.reduce((a, b) => a + b, 0) / values.length

const SOLVER_ORDER = ['learning', 'greedy', 'random']

/** One line per solver: mean total reward over seeds at each axis value. */
export function sweepSeries(rows: SweepRow[], axis?: string): { axis: string; series: Series[] } {
  const axes = new Set(rows.map((r) => r.axis))
  if (axes.size > 1) {
    throw new SchemaError(`sweep CSV mixes axes: ${[...axes].sort().join(', ')}`)
  }
  const fileAxis = rows[0].axis
  if (axis !== undefined && axis !== fileAxis) {
    throw new SchemaError(`requested axis '${axis}' but the CSV holds '${fileAxis}'`)
  }

  const solvers = [...new Set(rows.map((r) => r.solver))]
  solvers.sort((a, b) => {
    const ia = SOLVER_ORDER.indexOf(a)
    const ib = SOLVER_ORDER.indexOf(b)
    return (ia === -1 ? SOLVER_ORDER.length : ia) - (ib === -1 ? SOLVER_ORDER.length : ib)
  })

  const series = solvers.map((solver) => {
    const byValue = new Map<number, number[]>()
    for (const row of rows) {
      if (row.solver !== solver) continue
      const cell = byValue.get(row.value) ?? []
      cell.push(row.total_reward)
      byValue.set(row.value, cell)
    }
    const points = [...byValue.entries()]
      .map(([x, rewards]) => ({ x, y: mean(rewards) }))
      .sort((a, b) => a.x - b.x)
    return { label: solver, points }
  })
  return { axis: fileAxis, series }
}

export const TRACE_GROUP_KEYS = ['alpha', 'gamma'] as const
export type TraceGroupKey = (typeof TRACE_GROUP_KEYS)[number]

/** One line per group value: mean best-so-far over seeds at each episode. */
export function convergenceSeries(rows: TraceRow[], groupKey: TraceGroupKey): Series[] {
  if (!TRACE_GROUP_KEYS.includes(groupKey)) {
    throw new SchemaError(`unknown group key '${groupKey}'; expected alpha or gamma`)
  }
  const groups = [...new Set(rows.map((r) => r[groupKey]))].sort((a, b) => a - b)
  return groups.map((value) => {
    const byEpisode = new Map<number, number[]>()
    for (const row of rows) {
      if (row[groupKey] !== value) continue
      const cell = byEpisode.get(row.episode) ?? []
      cell.push(row.best_so_far)
      byEpisode.set(row.episode, cell)
    }
    const points = [...byEpisode.entries()]
      .map(([x, bests]) => ({ x, y: mean(bests) }))
      .sort((a, b) => a.x - b.x)
    return { label: `${groupKey}=${value}`, points }
  })
}
