/**
 * Chart layout: turns series into a backend-neutral list of drawing
 * primitives (lines, polylines, text). The SVG and raster backends both
 * consume the same scene so the two formats always agree.
 */

import { Series } from './aggregate'

export interface ChartSpec {
  title: string
  xLabel: string
  yLabel: string
  series: Series[]
}

export type Primitive =
  | { kind: 'rect'; x: number; y: number; w: number; h: number; color: string }
  | { kind: 'line'; x1: number; y1: number; x2: number; y2: number; color: string; width: number }
  | { kind: 'polyline'; points: [number, number][]; color: string; width: number }
  | { kind: 'marker'; x: number; y: number; color: string; size: number }
  | {
      kind: 'text'
      x: number
      y: number
      text: string
      color: string
      size: number
      anchor: 'start' | 'middle' | 'end'
      rotate?: boolean
    }

export interface Scene {
  width: number
  height: number
  primitives: Primitive[]
}

export const PALETTE = ['#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd', '#8c564b']

const MARGIN = { top: 36, right: 24, bottom: 46, left: 64 }
const AXIS_COLOR = '#333333'
const GRID_COLOR = '#dddddd'
const TEXT_COLOR = '#222222'

interface Scale {
  lo: number
  hi: number
  apply(v: number): number
}

function makeScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  if (lo === hi) {
    // degenerate extent (single point): pad by one unit either side
    lo -= 1
    hi += 1
  }
  const k = (outHi - outLo) / (hi - lo)
  return { lo, hi, apply: (v: number) => outLo + (v - lo) * k }
}

/** Round tick steps to 1/2/5 times a power of ten. */
export function niceTicks(lo: number, hi: number, want = 5): number[] {
  if (lo === hi) {
    lo -= 1
    hi += 1
  }
  const span = hi - lo
  const rawStep = span / Math.max(1, want)
  const power = Math.floor(Math.log10(rawStep))
  const base = Math.pow(10, power)
  let step = base
  for (const mult of [1, 2, 5, 10]) {
    step = mult * base
    if (span / step <= want) break
  }
  const ticks: number[] = []
  const first = Math.ceil(lo / step) * step
  for (let v = first; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v)
  }
  return ticks
}

export function formatTick(value: number): string {
  if (value === 0) return '0'
  const magnitude = Math.abs(value)
  if (magnitude >= 1e5 || magnitude < 1e-3) return value.toExponential(1)
  const text = value.toPrecision(4)
  return text.includes('.') ? text.replace(/\.?0+$/, '') : text
}

export function buildScene(chart: ChartSpec, width = 640, height = 440): Scene {
  const prims: Primitive[] = []
  const plotX0 = MARGIN.left
  const plotX1 = width - MARGIN.right
  const plotY0 = MARGIN.top
  const plotY1 = height - MARGIN.bottom

  prims.push({ kind: 'rect', x: 0, y: 0, w: width, h: height, color: '#ffffff' })

  const pts = chart.series.flatMap((s) => s.points)
  const xs = pts.map((p) => p.x)
  const ys = pts.map((p) => p.y)
  const xScale = makeScale(Math.min(...xs), Math.max(...xs), plotX0, plotX1)
  const ySpan = Math.max(...ys) - Math.min(...ys)
  const yPad = ySpan === 0 ? 1 : ySpan * 0.08
  const yScale = makeScale(Math.min(...ys) - yPad, Math.max(...ys) + yPad, plotY1, plotY0)

  for (const tick of niceTicks(xScale.lo, xScale.hi)) {
    const x = xScale.apply(tick)
    prims.push({ kind: 'line', x1: x, y1: plotY1, x2: x, y2: plotY0, color: GRID_COLOR, width: 1 })
    prims.push({ kind: 'line', x1: x, y1: plotY1, x2: x, y2: plotY1 + 4, color: AXIS_COLOR, width: 1 })
    prims.push({
      kind: 'text', x, y: plotY1 + 16, text: formatTick(tick),
      color: TEXT_COLOR, size: 10, anchor: 'middle',
    })
  }
  for (const tick of niceTicks(yScale.lo, yScale.hi)) {
    const y = yScale.apply(tick)
    prims.push({ kind: 'line', x1: plotX0, y1: y, x2: plotX1, y2: y, color: GRID_COLOR, width: 1 })
    prims.push({ kind: 'line', x1: plotX0 - 4, y1: y, x2: plotX0, y2: y, color: AXIS_COLOR, width: 1 })
    prims.push({
      kind: 'text', x: plotX0 - 7, y: y + 3, text: formatTick(tick),
      color: TEXT_COLOR, size: 10, anchor: 'end',
    })
  }

  // axes on top of the grid
  prims.push({ kind: 'line', x1: plotX0, y1: plotY1, x2: plotX1, y2: plotY1, color: AXIS_COLOR, width: 1 })
  prims.push({ kind: 'line', x1: plotX0, y1: plotY0, x2: plotX0, y2: plotY1, color: AXIS_COLOR, width: 1 })

  chart.series.forEach((series, index) => {
    const color = PALETTE[index % PALETTE.length]
    const points = series.points.map(
      (p) => [xScale.apply(p.x), yScale.apply(p.y)] as [number, number],
    )
    if (points.length > 1) {
      prims.push({ kind: 'polyline', points, color, width: 2 })
    }
    // markers keep single-point series visible
    for (const [x, y] of points) {
      prims.push({ kind: 'marker', x, y, color, size: 3 })
    }
  })

  // legend, top-right inside the plot area
  chart.series.forEach((series, index) => {
    const color = PALETTE[index % PALETTE.length]
    const y = plotY0 + 14 + index * 16
    prims.push({ kind: 'line', x1: plotX1 - 120, y1: y - 3, x2: plotX1 - 98, y2: y - 3, color, width: 2 })
    prims.push({
      kind: 'text', x: plotX1 - 92, y, text: series.label,
      color: TEXT_COLOR, size: 11, anchor: 'start',
    })
  })

  prims.push({
    kind: 'text', x: width / 2, y: 20, text: chart.title,
    color: TEXT_COLOR, size: 13, anchor: 'middle',
  })
  prims.push({
    kind: 'text', x: (plotX0 + plotX1) / 2, y: height - 12, text: chart.xLabel,
    color: TEXT_COLOR, size: 11, anchor: 'middle',
  })
  prims.push({
    kind: 'text', x: 16, y: (plotY0 + plotY1) / 2, text: chart.yLabel,
    color: TEXT_COLOR, size: 11, anchor: 'middle', rotate: true,
  })

  return { width, height, primitives: prims }
}
