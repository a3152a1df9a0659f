/**
 * Raster backend: draw a scene into an RGBA buffer with integer
 * primitives (Bresenham lines, bitmap text), ready for PNG encoding.
 */

import { GLYPH_H, GLYPH_W, glyphFor } from './font'
import { Primitive, Scene } from './scene'

export class Canvas {
  readonly width: number
  readonly height: number
  readonly pixels: Uint8Array

  constructor(width: number, height: number) {
    this.width = width
    this.height = height
    this.pixels = new Uint8Array(width * height * 4)
  }

  set(x: number, y: number, rgb: [number, number, number]): void {
    x = Math.round(x)
    y = Math.round(y)
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return
    const at = (y * this.width + x) * 4
    this.pixels[at] = rgb[0]
    this.pixels[at + 1] = rgb[1]
    this.pixels[at + 2] = rgb[2]
    this.pixels[at + 3] = 255
  }

  fillRect(x: number, y: number, w: number, h: number, rgb: [number, number, number]): void {
    for (let dy = 0; dy < h; dy++) {
      for (let dx = 0; dx < w; dx++) {
        this.set(x + dx, y + dy, rgb)
      }
    }
  }

  line(x1: number, y1: number, x2: number, y2: number,
       rgb: [number, number, number], width = 1): void {
    let x = Math.round(x1)
    let y = Math.round(y1)
    const ex = Math.round(x2)
    const ey = Math.round(y2)
    const dx = Math.abs(ex - x)
    const dy = -Math.abs(ey - y)
    const sx = x < ex ? 1 : -1
    const sy = y < ey ? 1 : -1
    let err = dx + dy
    for (;;) {
      this.set(x, y, rgb)
      if (width > 1) {
        // thicken perpendicular-ish: good enough for 2px chart strokes
        this.set(x + 1, y, rgb)
        this.set(x, y + 1, rgb)
      }
      if (x === ex && y === ey) break
      const e2 = 2 * err
      if (e2 >= dy) {
        err += dy
        x += sx
      }
      if (e2 <= dx) {
        err += dx
        y += sy
      }
    }
  }

  disc(cx: number, cy: number, radius: number, rgb: [number, number, number]): void {
    for (let dy = -radius; dy <= radius; dy++) {
      for (let dx = -radius; dx <= radius; dx++) {
        if (dx * dx + dy * dy <= radius * radius) this.set(cx + dx, cy + dy, rgb)
      }
    }
  }

  text(x: number, y: number, content: string, rgb: [number, number, number],
       anchor: 'start' | 'middle' | 'end' = 'start', rotate = false): void {
    const textWidth = content.length * (GLYPH_W + 1)
    let offset = 0
    if (anchor === 'middle') offset = -textWidth / 2
    if (anchor === 'end') offset = -textWidth
    for (let index = 0; index < content.length; index++) {
      const glyph = glyphFor(content[index].toLowerCase())
      const base = offset + index * (GLYPH_W + 1)
      for (let gy = 0; gy < GLYPH_H; gy++) {
        for (let gx = 0; gx < GLYPH_W; gx++) {
          if (!(glyph[gy] & (1 << (GLYPH_W - 1 - gx)))) continue
          if (rotate) {
            // 90 degrees counter-clockwise around the anchor
            this.set(x + gy, y - GLYPH_H + 1 - (base + gx) - offset * 2, rgb)
          } else {
            this.set(x + base + gx, y - GLYPH_H + 1 + gy, rgb)
          }
        }
      }
    }
  }
}

const hexToRgb = (hex: string): [number, number, number] => [
  parseInt(hex.slice(1, 3), 16),
  parseInt(hex.slice(3, 5), 16),
  parseInt(hex.slice(5, 7), 16),
]

export function renderRaster(scene: Scene): Canvas {
  const canvas = new Canvas(scene.width, scene.height)
  for (const prim of scene.primitives) {
    drawPrimitive(canvas, prim)
  }
  return canvas
}

function drawPrimitive(canvas: Canvas, prim: Primitive): void {
  switch (prim.kind) {
    case 'rect':
      canvas.fillRect(prim.x, prim.y, prim.w, prim.h, hexToRgb(prim.color))
      return
    case 'line':
      canvas.line(prim.x1, prim.y1, prim.x2, prim.y2, hexToRgb(prim.color), prim.width)
      return
    case 'polyline': {
      const rgb = hexToRgb(prim.color)
      for (let i = 1; i < prim.points.length; i++) {
        const [x1, y1] = prim.points[i - 1]
        const [x2, y2] = prim.points[i]
        canvas.line(x1, y1, x2, y2, rgb, prim.width)
      }
      return
    }
    case 'marker':
      canvas.disc(Math.round(prim.x), Math.round(prim.y), prim.size - 1, hexToRgb(prim.color))
      return
    case 'text':
      canvas.text(prim.x, prim.y, prim.text, hexToRgb(prim.color), prim.anchor, prim.rotate)
      return
  }
}
