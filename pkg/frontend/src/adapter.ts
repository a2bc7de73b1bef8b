/** Batch conversion: one plain-text story per file -> one .conllu file. */

import * as fs from 'fs'
import * as path from 'path'

import { documentText, validateConllu } from './conllu'
import { tagEntities, validateTagMap } from './ner'
import { parseSentence } from './parser'
import { splitSentences, tokenize } from './tokenizer'
import { AdapterSummary, TagMap, Token } from './types'

export const DEFAULT_TAG_MAP: TagMap = {
  PERSON: 'PERSON',
  ORGANIZATION: 'ORGANIZATION',
  LOCATION: 'LOCATION',
  TIME: 'TIME',
  DATE: 'DATE',
}

export function parseStory(text: string, tagMap: TagMap): Token[][] {
  const sentences: Token[][] = []
  for (const sentence of splitSentences(text)) {
    const surfaces = tokenize(sentence)
    if (!surfaces.length) continue
    const tokens = parseSentence(surfaces)
    tagEntities(tokens, tagMap)
    sentences.push(tokens)
  }
  return sentences
}

export function convertText(docId: string, text: string, tagMap: TagMap): string {
  return documentText(docId, parseStory(text, tagMap))
}

function atomicWrite(target: string, text: string): void {
  const tmp = `${target}.tmp`
  fs.writeFileSync(tmp, text, 'utf-8')
  fs.renameSync(tmp, target)
}

export function loadTagMap(file?: string): TagMap {
  if (!file) return { ...DEFAULT_TAG_MAP }
  const tagMap = JSON.parse(fs.readFileSync(file, 'utf-8')) as TagMap
  const problems = validateTagMap(tagMap)
  if (problems.length) {
    throw new Error(`invalid tag map: ${problems.join('; ')}`)
  }
  return tagMap
}

const ALLOWED_NER = new Set(['PERSON', 'ORGANIZATION', 'LOCATION', 'TIME', 'DATE'])

/** Convert every .txt story under inDir; filename stem becomes the doc id. */
export function parseDocuments(
  inDir: string,
  outDir: string,
  tagMap: TagMap,
  log: (message: string) => void = () => undefined,
): AdapterSummary {
  const files = fs
    .readdirSync(inDir)
    .filter((f) => f.endsWith('.txt'))
    .sort()
  fs.mkdirSync(outDir, { recursive: true })
  const summary: AdapterSummary = {
    docsIn: files.length,
    docsOut: 0,
    failures: 0,
    failedFiles: [],
  }
  for (const file of files) {
    const docId = path.basename(file, '.txt')
    try {
      const text = fs.readFileSync(path.join(inDir, file), 'utf-8')
      const conllu = convertText(docId, text, tagMap)
      const violations = validateConllu(conllu, ALLOWED_NER)
      if (violations.length) {
        throw new Error(
          `self-check failed: ${violations.map((v) => `line ${v.line}: ${v.message}`).join('; ')}`,
        )
      }
      atomicWrite(path.join(outDir, `${docId}.conllu`), conllu)
      summary.docsOut++
    } catch (err) {
      summary.failures++
      summary.failedFiles.push(file)
      log(`${file}: ${err instanceof Error ? err.message : String(err)}`)
    }
  }
  return summary
}

/** The validate_output operation: re-check emitted files, report findings. */
export function validateOutput(dir: string): { file: string; line: number; message: string }[] {
  const findings: { file: string; line: number; message: string }[] = []
  for (const file of fs.readdirSync(dir).filter((f) => f.endsWith('.conllu')).sort()) {
    const text = fs.readFileSync(path.join(dir, file), 'utf-8')
    for (const violation of validateConllu(text, ALLOWED_NER)) {
      findings.push({ file, ...violation })
    }
  }
  return findings
}
