/** Rule-based POS tagging over the token surfaces of one sentence. */

import {
  ADJECTIVES,
  ADVERBS,
  BE_FORMS,
  COORDINATORS,
  DETERMINERS,
  DO_FORMS,
  HAVE_FORMS,
  ING_ADJECTIVES,
  IRREGULAR_VERBS,
  MODALS,
  MONTHS,
  PREPOSITIONS,
  PRONOUNS,
  SUBORDINATORS,
  VERB_BASES,
  WEEKDAYS,
} from './lexicon'
import { FIRST_NAMES } from './lexicon'
import { verbLemma } from './lemmatizer'

const PUNCT = /^[.,!?;:"'()\[\]-]+$/
const NUMERIC = /^\d[\d,.]*$/
const TIME_TOKEN = /^\d{1,2}:\d{2}(am|pm)?$/i

function isVerbForm(lower: string): boolean {
  if (IRREGULAR_VERBS[lower] || VERB_BASES.has(lower)) return true
  const base = verbLemma(lower)
  return base !== lower && VERB_BASES.has(base)
}

/** Assign a universal POS tag to every surface token. */
export function tagSentence(surfaces: string[]): string[] {
  const tags: string[] = new Array(surfaces.length).fill('')
  // true while inside an article-opened noun phrase; a verb form there is
  // a noun ("the set", "a long walk")
  const articles = new Set(['a', 'an', 'the', 'this', 'that', 'these', 'those', 'another'])
  let npActive = false
  for (let i = 0; i < surfaces.length; i++) {
    const surface = surfaces[i]
    const lower = surface.toLowerCase()
    const prevTag = i > 0 ? tags[i - 1] : ''
    const tag = classify(surfaces, tags, i, surface, lower, prevTag, npActive)
    tags[i] = tag
    if (tag === 'DET') npActive = articles.has(lower)
    else if (tag !== 'ADJ' && tag !== 'ADV' && tag !== 'NUM') npActive = false
  }
  return tags
}

function classify(
  surfaces: string[],
  tags: string[],
  i: number,
  surface: string,
  lower: string,
  prevTag: string,
  npActive: boolean,
): string {
  if (PUNCT.test(surface)) return 'PUNCT'
  if (TIME_TOKEN.test(surface) || NUMERIC.test(surface)) return 'NUM'
  if (lower === "n't") return 'PART'
  if (lower === 'to') {
    const next = i + 1 < surfaces.length ? surfaces[i + 1].toLowerCase() : ''
    return next && VERB_BASES.has(next) ? 'PART' : 'ADP'
  }
  if (DETERMINERS.has(lower)) return 'DET'
  if (PRONOUNS.has(lower)) return 'PRON'
  if (MODALS.has(lower) || BE_FORMS.has(lower)) return 'AUX'
  if (COORDINATORS.has(lower)) return 'CCONJ'
  if (SUBORDINATORS.has(lower)) return 'SCONJ'
  if (ADVERBS.has(lower)) return 'ADV'
  if (i > 0 && /^[A-Z]/.test(surface) && !PUNCT.test(surfaces[i - 1])) return 'PROPN'
  if (i === 0 && (/^[A-Z]{2,4}$/.test(surface) || (/^[A-Z]/.test(surface) && FIRST_NAMES.has(lower)))) {
    return 'PROPN'
  }
  if (WEEKDAYS.has(lower) || MONTHS.has(lower)) return 'PROPN'
  if (ING_ADJECTIVES.has(lower)) return 'ADJ'
  if (HAVE_FORMS.has(lower) || DO_FORMS.has(lower)) {
    // auxiliary when a verb form follows (ignoring adverbs and negation)
    let j = i + 1
    while (j < surfaces.length) {
      const nl = surfaces[j].toLowerCase()
      if (ADVERBS.has(nl) || nl === "n't") j++
      else break
    }
    const nextLower = j < surfaces.length ? surfaces[j].toLowerCase() : ''
    return nextLower && isVerbForm(nextLower) ? 'AUX' : 'VERB'
  }
  if (PREPOSITIONS.has(lower)) return 'ADP'
  if (ADJECTIVES.has(lower)) return 'ADJ'
  if (isVerbForm(lower)) {
    if (npActive) return 'NOUN'
    if (lower.endsWith('ing') && prevTag === 'VERB') return 'NOUN' // gerund object: "went camping"
    return 'VERB'
  }
  if (lower.endsWith('ly') && lower.length > 3) return 'ADV'
  return 'NOUN'
}
