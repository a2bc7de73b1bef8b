#!/usr/bin/env node
/** genStories OUTDIR [COUNT] - write deterministic sample stories. */

import * as fs from 'fs'
import * as path from 'path'

import { makeStories } from './stories'

export function main(argv: string[]): number {
  const outDir = argv[0]
  const count = argv[1] ? Number(argv[1]) : 50
  if (!outDir || !Number.isInteger(count) || count < 1) {
    process.stderr.write('usage: genStories OUTDIR [COUNT]\n')
    return 3
  }
  fs.mkdirSync(outDir, { recursive: true })
  makeStories(count).forEach((story, i) => {
    fs.writeFileSync(path.join(outDir, `story-${String(i).padStart(3, '0')}.txt`), story, 'utf-8')
  })
  process.stdout.write(`wrote ${count} stories to ${outDir}\n`)
  return 0
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)))
}
