/** Heuristic dependency parsing for narrative declarative sentences.
 *
 * The goal is not full UD coverage: downstream event extraction only reads
 * nsubj, dobj, and compound:prt edges off VERB tokens (plus head validity),
 * and pattern mining additionally reads case/nmod configurations.  All
 * remaining tokens get conservative attachments to the clause structure.
 */

import { PARTICLES, PHRASAL_VERBS, PREPOSITIONS } from './lexicon'
import { lemmaFor } from './lemmatizer'
import { tagSentence } from './tagger'
import { Token } from './types'

interface Work {
  surface: string
  upos: string
  lemma: string
  head: number // 0-based index of head, -1 root, -2 unset
  deprel: string
}

const NOMINAL = new Set(['NOUN', 'PROPN', 'PRON', 'NUM'])

export function parseSentence(surfaces: string[]): Token[] {
  const tags = tagSentence(surfaces)
  const n = surfaces.length
  const w: Work[] = surfaces.map((surface, i) => ({
    surface,
    upos: tags[i],
    lemma: lemmaFor(surface, tags[i]),
    head: -2,
    deprel: '',
  }))

  // --- noun-phrase chunks: head = last nominal of a contiguous run ---------
  // (a pronoun is always its own chunk)
  const npHead: number[] = new Array(n).fill(-1)
  let i = 0
  while (i < n) {
    if (w[i].upos === 'PRON') {
      npHead[i] = i
      i++
      continue
    }
    if (NOMINAL.has(w[i].upos) || w[i].upos === 'DET' || w[i].upos === 'ADJ') {
      let j = i
      let head = -1
      while (
        j < n &&
        w[j].upos !== 'PRON' &&
        (NOMINAL.has(w[j].upos) || w[j].upos === 'DET' || w[j].upos === 'ADJ')
      ) {
        if (NOMINAL.has(w[j].upos)) head = j
        j++
      }
      if (head >= 0) {
        for (let k = i; k < j; k++) {
          npHead[k] = head
          if (k === head) continue
          if (w[k].upos === 'DET') set(w, k, head, 'det')
          else if (w[k].upos === 'ADJ') set(w, k, head, 'amod')
          else if (w[k].upos === 'NUM') set(w, k, head, 'nummod')
          else set(w, k, head, 'compound')
        }
      }
      i = j
    } else {
      i++
    }
  }

  // --- particles: phrasal-verb particles attach before PPs claim them -----
  for (let v = 0; v < n; v++) {
    if (w[v].upos !== 'VERB') continue
    for (let k = v + 1; k < n && k <= v + 4; k++) {
      if (w[k].upos === 'PUNCT' || w[k].upos === 'VERB' || w[k].upos === 'CCONJ' || w[k].upos === 'SCONJ') break
      const cand = w[k].surface.toLowerCase()
      if (
        (w[k].upos === 'ADP' || w[k].upos === 'ADV') &&
        PARTICLES.has(cand) &&
        PHRASAL_VERBS.has(`${w[v].lemma} ${cand}`) &&
        w[k].head === -2
      ) {
        set(w, k, v, 'compound:prt')
        break
      }
    }
  }

  // --- prepositional phrases: case to the next NP head, NP into context ----
  const inPP: boolean[] = new Array(n).fill(false)
  for (let p = 0; p < n; p++) {
    if (w[p].upos !== 'ADP' || w[p].head !== -2) continue
    let head = -1
    for (let k = p + 1; k < n && k <= p + 5; k++) {
      if (npHead[k] >= 0) {
        head = npHead[k]
        break
      }
      if (w[k].upos === 'VERB' || w[k].upos === 'PUNCT' || w[k].upos === 'ADP') break
    }
    if (head >= 0 && w[head].head === -2) {
      set(w, p, head, 'case')
      inPP[head] = true
    }
  }

  // --- verb groups: auxiliaries and copulas --------------------------------
  const clauseHeads: number[] = []
  for (let v = 0; v < n; v++) {
    if (w[v].upos !== 'AUX') continue
    // attach to the next verb if one follows closely, else copula to the
    // next predicate nominal/adjective
    let target = -1
    let rel = 'aux'
    for (let k = v + 1; k < n && k <= v + 4; k++) {
      if (w[k].upos === 'VERB') {
        target = k
        rel = 'aux'
        break
      }
      if (w[k].upos === 'AUX') continue
      if (w[k].upos === 'ADV' || w[k].upos === 'PART') continue
      break
    }
    if (target < 0) {
      for (let k = v + 1; k < n; k++) {
        if (w[k].upos === 'ADJ' || (npHead[k] === k && w[k].head === -2) || (npHead[k] === k && inPP[k])) {
          target = k
          rel = 'cop'
          break
        }
        if (w[k].upos === 'VERB' || w[k].upos === 'PUNCT') break
      }
    }
    if (target >= 0) set(w, v, target, rel)
  }

  // --- clause heads: verbs plus copular predicates --------------------------
  for (let v = 0; v < n; v++) {
    const isPredicate =
      w[v].upos === 'VERB' ||
      w.some((t, k) => t.deprel === 'cop' && t.head === v)
    if (isPredicate) clauseHeads.push(v)
  }
  if (clauseHeads.length === 0) {
    // verbless fragment: first NP head or first token is the root
    let root = w.findIndex((t, k) => npHead[k] === k && !inPP[k])
    if (root < 0) root = w.findIndex((t, k) => npHead[k] === k)
    if (root < 0) root = 0
    clauseHeads.push(root)
  }

  // clause span boundaries: commas, coordinators, subordinators
  const boundary: boolean[] = new Array(n).fill(false)
  for (let k = 0; k < n; k++) {
    if (w[k].surface === ',' || w[k].upos === 'CCONJ' || w[k].upos === 'SCONJ') boundary[k] = true
  }
  const clauseOf = (k: number) => {
    let c = 0
    for (let b = 0; b < k; b++) if (boundary[b]) c++
    return c
  }

  // --- particles, subjects, objects per verb --------------------------------
  for (const v of clauseHeads) {
    if (w[v].upos !== 'VERB' && !w.some((t) => t.deprel === 'cop' && t.head === v)) continue
    // subject: nearest preceding unattached NP head in the same clause
    const vClause = clauseOf(v)
    for (let k = v - 1; k >= 0; k--) {
      if (clauseOf(k) !== vClause) break
      if (npHead[k] === k && w[k].head === -2 && !inPP[k]) {
        set(w, k, v, 'nsubj')
        break
      }
    }
    // object: nearest following unattached NP head in the same clause
    if (w[v].upos === 'VERB') {
      for (let k = v + 1; k < n; k++) {
        if (clauseOf(k) !== vClause || w[k].upos === 'VERB') break
        if (npHead[k] === k && w[k].head === -2 && !inPP[k]) {
          set(w, k, v, 'dobj')
          break
        }
      }
    }
  }

  // --- clause structure ------------------------------------------------------
  const root = pickRoot(w, clauseHeads)
  set(w, root, -1, 'root')
  for (const v of clauseHeads) {
    if (v === root || w[v].head !== -2) continue
    const rel = w[v].upos === 'VERB' && w[v].surface.toLowerCase().endsWith('ing')
      ? 'advcl'
      : precededBySconj(w, v)
        ? 'advcl'
        : precededByCconj(w, v)
          ? 'conj'
          : 'parataxis'
    set(w, v, root, rel)
  }

  // --- leftovers -------------------------------------------------------------
  for (let k = 0; k < n; k++) {
    if (w[k].head !== -2) continue
    if (npHead[k] === k) {
      // unclaimed NP: prepositional complement to the previous NP or clause
      let prev = -1
      for (let b = k - 1; b >= 0; b--) {
        if (npHead[b] === b && w[b].head !== -2) {
          prev = b
          break
        }
        if (w[b].upos === 'VERB') {
          prev = b
          break
        }
      }
      if (inPP[k] && prev >= 0) set(w, k, prev, npHead[prev] === prev ? 'nmod' : 'obl')
      else if (prev >= 0) set(w, k, prev, 'dep')
      else set(w, k, root, 'dep')
      continue
    }
    switch (w[k].upos) {
      case 'PUNCT':
        set(w, k, root, 'punct')
        break
      case 'ADV':
      case 'PART':
        set(w, k, nearestHead(w, clauseHeads, k), 'advmod')
        break
      case 'SCONJ':
        set(w, k, nextClauseHead(w, clauseHeads, k), 'mark')
        break
      case 'CCONJ':
        set(w, k, nextClauseHead(w, clauseHeads, k), 'cc')
        break
      default:
        set(w, k, root, 'dep')
    }
  }

  // --- safety: no self-loops or cycles, heads in range ----------------------
  for (let k = 0; k < n; k++) {
    if (w[k].head === k) w[k].head = -1
  }
  for (let k = 0; k < n; k++) {
    let cur = k
    let steps = 0
    while (cur >= 0 && steps <= n) {
      cur = w[cur].head
      steps++
    }
    if (steps > n) {
      w[k].head = root === k ? -1 : root
      if (w[k].head === -1) w[k].deprel = 'root'
    }
  }

  return w.map((t, k) => ({
    index: k + 1,
    surface: t.surface || '_',
    lemma: t.lemma || t.surface.toLowerCase() || '_',
    upos: t.upos,
    head: t.head + 1,
    deprel: t.deprel || 'dep',
    ner: 'NONE',
  }))
}

function set(w: Work[], dep: number, head: number, deprel: string): void {
  if (dep === head) return
  w[dep].head = head
  w[dep].deprel = deprel
}

function pickRoot(w: Work[], clauseHeads: number[]): number {
  // first clause head not introduced by a subordinator and not a gerund
  for (const v of clauseHeads) {
    if (precededBySconj(w, v)) continue
    if (w[v].upos === 'VERB' && w[v].surface.toLowerCase().endsWith('ing')) continue
    return v
  }
  return clauseHeads[0]
}

function precededBySconj(w: Work[], v: number): boolean {
  for (let k = v - 1; k >= 0; k--) {
    if (w[k].surface === ',') return false
    if (w[k].upos === 'SCONJ') return true
    if (w[k].upos === 'VERB') return false
  }
  return false
}

function precededByCconj(w: Work[], v: number): boolean {
  for (let k = v - 1; k >= 0; k--) {
    if (w[k].upos === 'CCONJ') return true
    if (w[k].upos === 'VERB' || w[k].surface === ',') return false
  }
  return false
}

function nearestHead(w: Work[], clauseHeads: number[], k: number): number {
  let best = clauseHeads[0]
  let dist = Infinity
  for (const v of clauseHeads) {
    const d = Math.abs(v - k)
    if (d < dist) {
      best = v
      dist = d
    }
  }
  return best
}

function nextClauseHead(w: Work[], clauseHeads: number[], k: number): number {
  for (const v of clauseHeads) if (v > k) return v
  return nearestHead(w, clauseHeads, k)
}
