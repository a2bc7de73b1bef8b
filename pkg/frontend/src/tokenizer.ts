/** Plain-text sentence splitting and tokenization. */

const ABBREVIATIONS = new Set(['mr.', 'mrs.', 'ms.', 'dr.', 'prof.', 'st.', 'e.g.', 'i.e.'])

/** Split raw text into sentence strings. */
export function splitSentences(text: string): string[] {
  const sentences: string[] = []
  const paragraphs = text.split(/\n\s*\n/)
  for (const paragraph of paragraphs) {
    const flat = paragraph.replace(/\s+/g, ' ').trim()
    if (!flat) continue
    let current = ''
    const words = flat.split(' ')
    for (let i = 0; i < words.length; i++) {
      const word = words[i]
      current = current ? `${current} ${word}` : word
      const endsSentence =
        /[.!?]["')]?$/.test(word) &&
        !ABBREVIATIONS.has(word.toLowerCase()) &&
        !/^\d+\.$/.test(word) &&
        (i + 1 >= words.length || /^["'(]?[A-Z0-9]/.test(words[i + 1]))
      if (endsSentence) {
        sentences.push(current)
        current = ''
      }
    }
    if (current) sentences.push(current)
  }
  return sentences
}

const TIME_TOKEN = /^\d{1,2}:\d{2}(am|pm)?$/i

/** Tokenize one sentence: split punctuation and contractions. */
export function tokenize(sentence: string): string[] {
  const out: string[] = []
  for (const raw of sentence.split(/\s+/)) {
    if (!raw) continue
    let word = raw
    const leading: string[] = []
    const trailing: string[] = []
    let m: RegExpMatchArray | null
    while ((m = word.match(/^(["'(\[])(.+)$/)) !== null) {
      leading.push(m[1])
      word = m[2]
    }
    while ((m = word.match(/^(.+?)([.,!?;:"')\]]+)$/)) !== null && !TIME_TOKEN.test(word) && !ABBREVIATIONS.has(word.toLowerCase())) {
      trailing.unshift(...m[2].split(''))
      word = m[1]
    }
    out.push(...leading)
    if (word) out.push(...splitContractions(word))
    out.push(...trailing)
  }
  return out
}

function splitContractions(word: string): string[] {
  const lower = word.toLowerCase()
  if (lower.endsWith("n't") && lower.length > 3) {
    return [word.slice(0, -3), word.slice(-3)]
  }
  for (const suffix of ["'ll", "'ve", "'re", "'s", "'m", "'d"]) {
    if (lower.endsWith(suffix) && lower.length > suffix.length) {
      return [word.slice(0, -suffix.length), word.slice(-suffix.length)]
    }
  }
  return [word]
}
