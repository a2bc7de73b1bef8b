/** CoNLL-U emission and structural validation. */

import { Token } from './types'

const LEMMA_REQUIRED = new Set(['VERB', 'NOUN', 'PRON', 'PROPN'])

function clean(field: string): string {
  return field.replace(/\s+/g, '_') || '_'
}

export function sentenceLines(tokens: Token[]): string[] {
  return tokens.map((t) => {
    const misc = t.ner !== 'NONE' ? `NER=${t.ner}` : '_'
    return [
      String(t.index),
      clean(t.surface),
      clean(t.lemma),
      t.upos,
      '_',
      '_',
      String(t.head),
      t.deprel,
      '_',
      misc,
    ].join('\t')
  })
}

export function documentText(docId: string, sentences: Token[][]): string {
  const lines: string[] = [`# newdoc id = ${docId}`]
  for (const sentence of sentences) {
    lines.push(...sentenceLines(sentence))
    lines.push('')
  }
  return lines.join('\n') + (sentences.length ? '' : '\n')
}

export interface Violation {
  line: number
  message: string
}

/** Re-check emitted CoNLL-U against the loader's grammar: 10 columns,
 * consecutive integer ids, in-range heads, NER tags from the five types. */
export function validateConllu(text: string, allowedNer: Set<string>): Violation[] {
  const violations: Violation[] = []
  const lines = text.split('\n')
  let sentence: { id: number; head: number; line: number }[] = []

  const flush = () => {
    const n = sentence.length
    for (const row of sentence) {
      if (row.head < 0 || row.head > n || row.head === row.id) {
        violations.push({ line: row.line, message: `head ${row.head} out of range (sentence of ${n})` })
      }
    }
    sentence = []
  }

  for (let i = 0; i < lines.length; i++) {
    const line = lines[i]
    const lineno = i + 1
    if (!line) {
      flush()
      continue
    }
    if (line.startsWith('#')) continue
    const cols = line.split('\t')
    if (cols.length !== 10) {
      violations.push({ line: lineno, message: `expected 10 columns, got ${cols.length}` })
      continue
    }
    const id = Number(cols[0])
    if (!Number.isInteger(id) || id !== sentence.length + 1) {
      violations.push({ line: lineno, message: `token id ${cols[0]} not consecutive` })
    }
    const head = Number(cols[6])
    if (!Number.isInteger(head)) {
      violations.push({ line: lineno, message: `head ${cols[6]} is not an integer` })
    }
    if (LEMMA_REQUIRED.has(cols[3]) && (cols[2] === '_' || !cols[2])) {
      violations.push({ line: lineno, message: `empty lemma for ${cols[3]} token` })
    }
    const misc = cols[9]
    if (misc !== '_') {
      for (const item of misc.split('|')) {
        if (item.startsWith('NER=')) {
          const tag = item.slice(4)
          if (!allowedNer.has(tag)) {
            violations.push({ line: lineno, message: `NER tag ${tag} outside the allowed set` })
          }
        }
      }
    }
    sentence.push({ id, head, line: lineno })
  }
  flush()
  return violations
}
