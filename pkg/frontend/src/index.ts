export { convergenceSeries, mean, sweepSeries, TRACE_GROUP_KEYS } from './aggregate'
export type { Point, Series, TraceGroupKey } from './aggregate'
export { encodePng } from './png'
export {
  convergenceChart,
  plotConvergence,
  plotSweep,
  sweepChart,
  writeChart,
} from './plots'
export { Canvas, renderRaster } from './raster'
export { buildScene, formatTick, niceTicks, PALETTE } from './scene'
export type { ChartSpec, Primitive, Scene } from './scene'
export { parseSweepCsv, parseTraceCsv, SchemaError } from './schema'
export type { SweepRow, TraceRow } from './schema'
export { renderSvg } from './svg'
