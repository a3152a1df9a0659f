/**
 * CSV schemas emitted by the experiment harness and their loaders.
 *
 * Sweep files:  axis,value,seed,solver,total_reward,wall_ms
 * Trace files:  episode,reward,best_so_far,alpha,gamma,seed
 *
 * Solver-failure rows in sweep files carry an empty total_reward and are
 * skipped on load; every retained number comes straight from a CSV cell.
 */

import Papa from 'papaparse'

export class SchemaError extends Error {}

export interface SweepRow {
  axis: string
  value: number
  seed: number
  solver: string
  total_reward: number
  wall_ms: number
}

export interface TraceRow {
  episode: number
  reward: number
  best_so_far: number
  alpha: number
  gamma: number
  seed: number
}

const SWEEP_COLUMNS = ['axis', 'value', 'seed', 'solver', 'total_reward', 'wall_ms']
const TRACE_COLUMNS = ['episode', 'reward', 'best_so_far', 'alpha', 'gamma', 'seed']

function parseTable(text: string, columns: string[], what: string): Record<string, string>[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  })
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]
    throw new SchemaError(`${what} CSV is malformed: ${first.message} (row ${first.row})`)
  }
  const fields = parsed.meta.fields ?? []
  for (const column of columns) {
    if (!fields.includes(column)) {
      throw new SchemaError(`${what} CSV is missing column ${column}`)
    }
  }
  if (parsed.data.length === 0) {
    throw new SchemaError(`${what} CSV has no data rows`)
  }
  return parsed.data
}

function toNumber(raw: string, column: string, row: number): number {
  const value = Number(raw)
  if (raw === '' || !Number.isFinite(value)) {
    throw new SchemaError(`row ${row}: column ${column} is not a number: '${raw}'`)
  }
  return value
}

export function parseSweepCsv(text: string): SweepRow[] {
  const rows: SweepRow[] = []
  parseTable(text, SWEEP_COLUMNS, 'sweep').forEach((record, index) => {
    if (record.total_reward === '') return // solver-failure row
    rows.push({
      axis: record.axis,
      value: toNumber(record.value, 'value', index),
      seed: toNumber(record.seed, 'seed', index),
      solver: record.solver,
      total_reward: toNumber(record.total_reward, 'total_reward', index),
      wall_ms: toNumber(record.wall_ms, 'wall_ms', index),
    })
  })
  if (rows.length === 0) {
    throw new SchemaError('sweep CSV contains only failure rows')
  }
  return rows
}

export function parseTraceCsv(text: string): TraceRow[] {
  return parseTable(text, TRACE_COLUMNS, 'trace').map((record, index) => ({
    episode: toNumber(record.episode, 'episode', index),
    reward: toNumber(record.reward, 'reward', index),
    best_so_far: toNumber(record.best_so_far, 'best_so_far', index),
    alpha: toNumber(record.alpha, 'alpha', index),
    gamma: toNumber(record.gamma, 'gamma', index),
    seed: toNumber(record.seed, 'seed', index),
  }))
}
