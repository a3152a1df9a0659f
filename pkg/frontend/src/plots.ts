/**
 * The two figure builders and file output. The output format follows the
 * file extension: .svg (vector) or .png (raster).
 */

import { writeFileSync } from 'fs'
import { extname } from 'path'

import { convergenceSeries, sweepSeries, TraceGroupKey } from './aggregate'
import { encodePng } from './png'
import { renderRaster } from './raster'
import { buildScene, ChartSpec } from './scene'
import { parseSweepCsv, parseTraceCsv, SchemaError } from './schema'
import { renderSvg } from './svg'

export interface RenderOptions {
  width?: number
  height?: number
}

export function sweepChart(csvText: string, axis?: string): ChartSpec {
  const rows = parseSweepCsv(csvText)
  const { axis: fileAxis, series } = sweepSeries(rows, axis)
  const seeds = new Set(rows.map((r) => r.seed)).size
  return {
    title: `total reward vs ${fileAxis} (mean over ${seeds} seeds)`,
    xLabel: fileAxis,
    yLabel: 'total reward',
    series,
  }
}

export function convergenceChart(csvText: string, groupKey: TraceGroupKey): ChartSpec {
  const series = convergenceSeries(parseTraceCsv(csvText), groupKey)
  return {
    title: `convergence by ${groupKey}`,
    xLabel: 'episode',
    yLabel: 'best reward so far',
    series,
  }
}

/** Render a chart and write it; the extension picks the image format. */
export function writeChart(chart: ChartSpec, outPath: string, options: RenderOptions = {}): void {
  const scene = buildScene(chart, options.width ?? 640, options.height ?? 440)
  const extension = extname(outPath).toLowerCase()
  if (extension === '.svg') {
    writeFileSync(outPath, renderSvg(scene))
  } else if (extension === '.png') {
    const canvas = renderRaster(scene)
    writeFileSync(outPath, encodePng(canvas.width, canvas.height, canvas.pixels))
  } else {
    throw new SchemaError(`unsupported output extension '${extension}'; use .svg or .png`)
  }
}

export function plotSweep(csvText: string, outPath: string, axis?: string,
                          options: RenderOptions = {}): void {
  writeChart(sweepChart(csvText, axis), outPath, options)
}

export function plotConvergence(csvText: string, outPath: string, groupKey: TraceGroupKey,
                                options: RenderOptions = {}): void {
  writeChart(convergenceChart(csvText, groupKey), outPath, options)
}
