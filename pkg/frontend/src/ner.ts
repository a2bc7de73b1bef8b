/** Gazetteer and shape-based named-entity tagging over parsed tokens. */

import {
  FIRST_NAMES,
  HONORIFICS,
  LOCATION_CUES,
  MONTHS,
  ORG_CUES,
  TIME_WORDS,
  WEEKDAYS,
} from './lexicon'
import { TagMap, Token } from './types'

const TIME_TOKEN = /^\d{1,2}:\d{2}(am|pm)?$/i
const YEAR = /^(19|20)\d\d$/
const INITIALS = /^[A-Z]{2,4}$/

function classifySpan(tokens: Token[], span: number[]): string {
  const surfaces = span.map((k) => tokens[k].surface)
  const lowers = surfaces.map((s) => s.toLowerCase())
  if (lowers.some((s) => WEEKDAYS.has(s) || MONTHS.has(s))) return 'DATE'
  if (lowers.some((s) => ORG_CUES.has(s.replace(/\.$/, '')))) return 'ORGANIZATION'
  if (lowers.some((s) => LOCATION_CUES.has(s))) return 'LOCATION'
  if (span.length === 1) {
    const surface = surfaces[0]
    if (INITIALS.test(surface)) return 'PERSON'
    if (FIRST_NAMES.has(lowers[0])) return 'PERSON'
    return 'PERSON'
  }
  if (span.length === 2) return 'PERSON'
  return 'LOCATION'
}

/** Tag named entities in place, then map through the adapter tag map. */
export function tagEntities(tokens: Token[], tagMap: TagMap): void {
  // capitalized PROPN runs
  let i = 0
  while (i < tokens.length) {
    if (tokens[i].upos === 'PROPN' && /^[A-Z]/.test(tokens[i].surface)) {
      const span: number[] = []
      let j = i
      while (j < tokens.length && tokens[j].upos === 'PROPN' && /^[A-Z]/.test(tokens[j].surface)) {
        span.push(j)
        j++
      }
      let tag = classifySpan(tokens, span)
      if (i > 0 && HONORIFICS.has(tokens[i - 1].surface.toLowerCase().replace(/\.$/, ''))) {
        tag = 'PERSON'
      }
      for (const k of span) tokens[k].ner = tag
      i = j
    } else {
      i++
    }
  }
  // times and dates on plain tokens
  for (let k = 0; k < tokens.length; k++) {
    const tok = tokens[k]
    if (tok.ner !== 'NONE') continue
    const lower = tok.surface.toLowerCase()
    if (TIME_TOKEN.test(tok.surface)) tok.ner = 'TIME'
    else if (YEAR.test(tok.surface)) tok.ner = 'DATE'
    else if (TIME_WORDS.has(lower) && lower !== 'am') {
      // "1 pm", "around noon"; bare "am" is almost always the verb
      if (lower === 'pm' || lower === 'noon' || lower === 'midnight') {
        tok.ner = 'TIME'
        if (lower === 'pm' && k > 0 && tokens[k - 1].upos === 'NUM') tokens[k - 1].ner = 'TIME'
      }
    }
  }
  // apply the tag map; unmapped or NONE-mapped tags are dropped
  for (const tok of tokens) {
    if (tok.ner === 'NONE') continue
    const mapped = tagMap[tok.ner]
    tok.ner = mapped && mapped !== 'NONE' ? mapped : 'NONE'
  }
}

export function validateTagMap(tagMap: TagMap): string[] {
  const problems: string[] = []
  const targets = new Set(['PERSON', 'ORGANIZATION', 'LOCATION', 'TIME', 'DATE', 'NONE'])
  for (const [source, target] of Object.entries(tagMap)) {
    if (!targets.has(target)) {
      problems.push(`tag map sends ${source} to unknown type ${target}`)
    }
  }
  for (const required of ['PERSON', 'ORGANIZATION', 'LOCATION', 'TIME', 'DATE']) {
    if (!(required in tagMap)) problems.push(`tag map missing entry for ${required}`)
  }
  return problems
}
