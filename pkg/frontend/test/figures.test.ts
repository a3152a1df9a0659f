/**
 * End-to-end figure rendering from real harness CSV output (the four
 * figure analogues), plus the aggregation spot check: one plotted point
 * must equal the seed mean computed by hand from the CSV cells.
 */

import { existsSync, mkdtempSync, readFileSync, statSync } from 'fs'
import { tmpdir } from 'os'
import { join } from 'path'
import { describe, expect, it } from 'vitest'

import { sweepSeries } from '../src/aggregate'
import { main } from '../src/cli'
import { parseSweepCsv } from '../src/schema'

const fixture = (name: string): string => join(__dirname, 'fixtures', name)
const outDir = mkdtempSync(join(tmpdir(), 'edge-mta-plots-'))

const FIGURES: Array<{ name: string; args: string[] }> = [
  { name: 'servers.svg', args: ['sweep', '--in', fixture('fig_servers.csv')] },
  { name: 'tasks.svg', args: ['sweep', '--in', fixture('fig_tasks.csv')] },
  { name: 'price.png', args: ['sweep', '--in', fixture('fig_price.csv')] },
  { name: 'data.svg', args: ['sweep', '--in', fixture('fig_data.csv')] },
  {
    name: 'gamma.svg',
    args: ['convergence', '--in', fixture('fig_gamma_trace.csv'), '--group', 'gamma'],
  },
  {
    name: 'alpha.png',
    args: ['convergence', '--in', fixture('fig_alpha_trace.csv'), '--group', 'alpha'],
  },
]

describe('figure analogues from harness CSVs', () => {
  for (const figure of FIGURES) {
    it(`renders ${figure.name}`, () => {
      const out = join(outDir, figure.name)
      const code = main([...figure.args, '--out', out])
      expect(code).toBe(0)
      expect(existsSync(out)).toBe(true)
      expect(statSync(out).size).toBeGreaterThan(500)
      if (out.endsWith('.svg')) {
        expect(readFileSync(out, 'utf-8')).toContain('</svg>')
      } else {
        expect(readFileSync(out).subarray(1, 4).toString('ascii')).toBe('PNG')
      }
    })
  }

  it('sweep charts carry one line per solver', () => {
    const rows = parseSweepCsv(readFileSync(fixture('fig_servers.csv'), 'utf-8'))
    const { series } = sweepSeries(rows)
    expect(series.map((s) => s.label)).toEqual(['learning', 'greedy', 'random'])
    for (const s of series) {
      expect(s.points).toHaveLength(3)
    }
  })

  it('spot check: an aggregated point equals the hand-computed seed mean', () => {
    const text = readFileSync(fixture('fig_servers.csv'), 'utf-8')
    const rows = parseSweepCsv(text)
    // hand-compute the greedy mean at the first axis value from raw cells
    const value = Math.min(...rows.map((r) => r.value))
    const cells = rows.filter((r) => r.solver === 'greedy' && r.value === value)
    expect(cells).toHaveLength(3) // seeds 0, 1, 2
    const byHand = (cells[0].total_reward + cells[1].total_reward + cells[2].total_reward) / 3
    const { series } = sweepSeries(rows)
    const plotted = series
      .find((s) => s.label === 'greedy')!
      .points.find((p) => p.x === value)!
    expect(plotted.y).toBeCloseTo(byHand, 12)
  })
})

describe('cli error paths', () => {
  it('unknown command is a usage error', () => {
    expect(main(['scatter', '--in', 'x.csv', '--out', 'y.svg'])).toBe(2)
  })

  it('unknown group key is a usage error', () => {
    const code = main([
      'convergence', '--in', fixture('fig_gamma_trace.csv'),
      '--out', join(outDir, 'bad.svg'), '--group', 'epsilon',
    ])
    expect(code).toBe(2)
  })

  it('missing input file is an operational error', () => {
    expect(main(['sweep', '--in', 'nope.csv', '--out', join(outDir, 'x.svg')])).toBe(1)
  })

  it('axis mismatch is an operational error and writes nothing', () => {
    const out = join(outDir, 'mismatch.svg')
    const code = main([
      'sweep', '--in', fixture('fig_tasks.csv'), '--out', out,
      '--axis', 'price_scale',
    ])
    expect(code).toBe(1)
    expect(existsSync(out)).toBe(false)
  })

  it('unsupported extension is an operational error', () => {
    const code = main([
      'sweep', '--in', fixture('fig_tasks.csv'), '--out', join(outDir, 'x.pdf'),
    ])
    expect(code).toBe(1)
  })
})
