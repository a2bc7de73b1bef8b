/** Small rule-based English lemmatizer. */

import { IRREGULAR_VERBS, VERB_BASES } from './lexicon'

const VOWELS = new Set(['a', 'e', 'i', 'o', 'u', 'y'])

function vowelGroups(word: string): number {
  let groups = 0
  let inGroup = false
  for (const ch of word) {
    if (VOWELS.has(ch)) {
      if (!inGroup) groups++
      inGroup = true
    } else {
      inGroup = false
    }
  }
  return groups
}

function restoreStem(stem: string): string {
  if (stem.length >= 3) {
    const last = stem[stem.length - 1]
    const prev = stem[stem.length - 2]
    if (last === prev && !VOWELS.has(last) && !'lszf'.includes(last)) {
      return stem.slice(0, -1) // stopped -> stop, putting -> put
    }
  }
  if (VERB_BASES.has(stem)) return stem
  if (VERB_BASES.has(stem + 'e')) return stem + 'e' // us -> use, hik -> hike
  // unknown stems: add e only for short single-syllable CVC-ish stems
  if (
    stem.length >= 2 &&
    vowelGroups(stem) === 1 &&
    !VOWELS.has(stem[stem.length - 1]) &&
    VOWELS.has(stem[stem.length - 2])
  ) {
    return stem + 'e'
  }
  return stem
}

export function verbLemma(surfaceLower: string): string {
  if (IRREGULAR_VERBS[surfaceLower]) return IRREGULAR_VERBS[surfaceLower]
  if (VERB_BASES.has(surfaceLower)) return surfaceLower
  if (surfaceLower.endsWith('ies') && surfaceLower.length > 4) return surfaceLower.slice(0, -3) + 'y'
  if (surfaceLower.endsWith('ied') && surfaceLower.length > 4) return surfaceLower.slice(0, -3) + 'y'
  if (surfaceLower.endsWith('ing') && surfaceLower.length > 4) return restoreStem(surfaceLower.slice(0, -3))
  if (surfaceLower.endsWith('ed') && surfaceLower.length > 3) {
    const bare = surfaceLower.slice(0, -2)
    if (VERB_BASES.has(bare)) return bare // roasted -> roast
    if (VERB_BASES.has(bare + 'e')) return bare + 'e' // arrived -> arrive
    return restoreStem(bare)
  }
  if (/(ch|sh|ss|x|z|o)es$/.test(surfaceLower)) return surfaceLower.slice(0, -2)
  if (surfaceLower.endsWith('s') && !surfaceLower.endsWith('ss') && surfaceLower.length > 2) {
    return surfaceLower.slice(0, -1)
  }
  return surfaceLower
}

export function nounLemma(surfaceLower: string): string {
  if (surfaceLower.endsWith('ies') && surfaceLower.length > 4) return surfaceLower.slice(0, -3) + 'y'
  if (/(ch|sh|ss|x|z)es$/.test(surfaceLower)) return surfaceLower.slice(0, -2)
  if (surfaceLower.endsWith('oes') && surfaceLower.length > 4) return surfaceLower.slice(0, -2)
  if (surfaceLower.endsWith('s') && !surfaceLower.endsWith('ss') && !surfaceLower.endsWith('us') && surfaceLower.length > 2) {
    return surfaceLower.slice(0, -1)
  }
  return surfaceLower
}

const CONTRACTION_LEMMAS: Record<string, string> = {
  "n't": 'not', "'ll": 'will', "'ve": 'have', "'re": 'be', "'m": 'be', "'s": 'be', "'d": 'would',
}

export function lemmaFor(surface: string, upos: string): string {
  const lower = surface.toLowerCase()
  if (CONTRACTION_LEMMAS[lower] && (upos === 'AUX' || upos === 'PART')) {
    return CONTRACTION_LEMMAS[lower]
  }
  switch (upos) {
    case 'VERB':
    case 'AUX':
      return verbLemma(lower)
    case 'NOUN':
      return nounLemma(lower)
    case 'PROPN':
      return surface
    case 'PUNCT':
    case 'SYM':
    case 'NUM':
      return surface
    default:
      return lower
  }
}
