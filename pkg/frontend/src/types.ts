export interface Token {
  /** 1-based position in the sentence */
  index: number
  surface: string
  lemma: string
  upos: string
  /** 0 = root */
  head: number
  deprel: string
  /** named-entity tag or NONE */
  ner: string
}

export interface AdapterSummary {
  docsIn: number
  docsOut: number
  failures: number
  failedFiles: string[]
}

export type TagMap = Record<string, string>

export const NE_TYPES = ['PERSON', 'ORGANIZATION', 'LOCATION', 'TIME', 'DATE'] as const
