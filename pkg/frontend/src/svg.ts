/** SVG backend: serialize a scene to a standalone SVG document. */

import { Scene } from './scene'

const escape = (text: string): string =>
  text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;')

export function renderSvg(scene: Scene): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.width}" ` +
      `height="${scene.height}" viewBox="0 0 ${scene.width} ${scene.height}">`,
  ]
  for (const prim of scene.primitives) {
    switch (prim.kind) {
      case 'rect':
        parts.push(
          `<rect x="${prim.x}" y="${prim.y}" width="${prim.w}" height="${prim.h}" ` +
            `fill="${prim.color}"/>`,
        )
        break
      case 'line':
        parts.push(
          `<line x1="${r(prim.x1)}" y1="${r(prim.y1)}" x2="${r(prim.x2)}" ` +
            `y2="${r(prim.y2)}" stroke="${prim.color}" stroke-width="${prim.width}"/>`,
        )
        break
      case 'polyline': {
        const points = prim.points.map(([x, y]) => `${r(x)},${r(y)}`).join(' ')
        parts.push(
          `<polyline points="${points}" fill="none" stroke="${prim.color}" ` +
            `stroke-width="${prim.width}"/>`,
        )
        break
      }
      case 'marker':
        parts.push(
          `<circle cx="${r(prim.x)}" cy="${r(prim.y)}" r="${prim.size}" ` +
            `fill="${prim.color}"/>`,
        )
        break
      case 'text': {
        const transform = prim.rotate
          ? ` transform="rotate(-90 ${r(prim.x)} ${r(prim.y)})"`
          : ''
        parts.push(
          `<text x="${r(prim.x)}" y="${r(prim.y)}" font-family="sans-serif" ` +
            `font-size="${prim.size}" fill="${prim.color}" ` +
            `text-anchor="${prim.anchor}"${transform}>${escape(prim.text)}</text>`,
        )
        break
      }
    }
  }
  parts.push('</svg>')
  return parts.join('\n') + '\n'
}

const r = (v: number): number => Math.round(v * 100) / 100
