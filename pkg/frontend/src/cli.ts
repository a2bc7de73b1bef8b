#!/usr/bin/env node
/** adapter --in DIR --out DIR [--tagmap FILE] [--allow-failures] */

import { loadTagMap, parseDocuments } from './adapter'

function usage(): never {
  process.stderr.write('usage: adapter --in DIR --out DIR [--tagmap FILE] [--allow-failures]\n')
  process.exit(3)
}

export function main(argv: string[]): number {
  let inDir = ''
  let outDir = ''
  let tagMapFile: string | undefined
  let allowFailures = false
  for (let i = 0; i < argv.length; i++) {
    switch (argv[i]) {
      case '--in':
        inDir = argv[++i] ?? ''
        break
      case '--out':
        outDir = argv[++i] ?? ''
        break
      case '--tagmap':
        tagMapFile = argv[++i]
        break
      case '--allow-failures':
        allowFailures = true
        break
      default:
        usage()
    }
  }
  if (!inDir || !outDir) usage()

  const tagMap = loadTagMap(tagMapFile)
  const summary = parseDocuments(inDir, outDir, tagMap, (m) => process.stderr.write(m + '\n'))
  process.stdout.write(
    `adapter: ${summary.docsIn} in, ${summary.docsOut} out, ${summary.failures} failures\n`,
  )
  if (summary.failures > 0 && !allowFailures) return 1
  return 0
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)))
}
