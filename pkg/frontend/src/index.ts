export { DEFAULT_TAG_MAP, convertText, loadTagMap, parseDocuments, parseStory, validateOutput } from './adapter'
export { documentText, sentenceLines, validateConllu } from './conllu'
export { lemmaFor, nounLemma, verbLemma } from './lemmatizer'
export { tagEntities, validateTagMap } from './ner'
export { parseSentence } from './parser'
export { makeStories, makeStory } from './stories'
export { tagSentence } from './tagger'
export { splitSentences, tokenize } from './tokenizer'
export { AdapterSummary, TagMap, Token } from './types'
