/** Closed-class word lists, verb inventories, and gazetteers the rule
 * pipeline runs on.  Everything is lowercase. */

export const DETERMINERS = new Set([
  'a', 'an', 'the', 'this', 'that', 'these', 'those', 'some', 'any', 'no',
  'every', 'each', 'another', 'both', 'either', 'neither', 'all',
])

export const PRONOUNS = new Set([
  'i', 'me', 'my', 'mine', 'myself', 'we', 'us', 'our', 'ours', 'ourselves',
  'you', 'your', 'yours', 'yourself', 'yourselves', 'he', 'him', 'his',
  'himself', 'she', 'her', 'hers', 'herself', 'it', 'its', 'itself', 'they',
  'them', 'their', 'theirs', 'themselves', 'one', 'oneself', 'someone',
  'somebody', 'something', 'anyone', 'anybody', 'anything', 'everyone',
  'everybody', 'everything', 'nobody', 'nothing', 'who', 'whom', 'what',
])

export const BE_FORMS = new Set(['be', 'am', 'is', 'are', 'was', 'were', 'been', 'being', "'s", "'re", "'m"])
export const HAVE_FORMS = new Set(['have', 'has', 'had', 'having', "'ve", "'d"])
export const DO_FORMS = new Set(['do', 'does', 'did'])
export const MODALS = new Set(['will', 'would', 'can', 'could', 'shall', 'should', 'may', 'might', 'must', "'ll"])

export const PREPOSITIONS = new Set([
  'in', 'on', 'at', 'by', 'for', 'with', 'from', 'to', 'of', 'over', 'under',
  'above', 'below', 'near', 'beside', 'between', 'through', 'during',
  'before', 'after', 'about', 'against', 'along', 'around', 'behind',
  'beyond', 'inside', 'outside', 'onto', 'upon', 'within', 'without',
  'across', 'past', 'toward', 'towards', 'off', 'out', 'up', 'down', 'into',
])

/** Candidate particle words; a verb+particle pair must also be listed in
 * PHRASAL_VERBS before it is attached as compound:prt. */
export const PARTICLES = new Set([
  'up', 'down', 'out', 'off', 'in', 'on', 'over', 'away', 'back', 'around', 'along',
])

export const PHRASAL_VERBS = new Set([
  'put up', 'set up', 'pack up', 'wake up', 'clean up', 'pick up', 'wrap up',
  'tidy up', 'fill up', 'load up', 'light up', 'heat up', 'dig up',
  'stack up', 'charge up', 'board up', 'cut up', 'break down', 'calm down',
  'settle down', 'sit down', 'lie down', 'write down', 'go out', 'head out',
  'ride out', 'check out', 'set out', 'clear out', 'move out', 'take off',
  'drop off', 'turn off', 'put off', 'head back', 'come back', 'go back',
  'drive back', 'get back', 'turn on', 'put on', 'try on', 'move in',
  'check in', 'settle in', 'crawl in', 'turn in', 'give away', 'put away',
  'pack away', 'walk away', 'drive away', 'take over', 'look over',
  'haul in', 'bring in', 'go up', 'put out', 'hang up',
])

export const SUBORDINATORS = new Set([
  'because', 'although', 'though', 'while', 'when', 'once', 'since', 'if',
  'unless', 'until', 'whenever', 'whereas',
])

export const COORDINATORS = new Set(['and', 'or', 'but', 'nor', 'so', 'yet'])

export const ADVERBS = new Set([
  'then', 'there', 'here', 'very', 'really', 'quite', 'too', 'also', 'just',
  'already', 'still', 'never', 'always', 'often', 'soon', 'early', 'late',
  'now', 'again', 'finally', 'later', 'almost', 'luckily', 'slowly',
  'quickly', 'together', 'not', 'maybe', 'perhaps',
])

export const ING_ADJECTIVES = new Set([
  'frustrating', 'exciting', 'interesting', 'amazing', 'tiring', 'boring',
  'relaxing', 'stunning', 'charming', 'freezing', 'exhausting', 'soothing',
])

export const ADJECTIVES = new Set([
  'good', 'bad', 'big', 'small', 'little', 'long', 'short', 'hot', 'cold',
  'new', 'old', 'nice', 'great', 'heavy', 'dark', 'wet', 'dry', 'calm',
  'minor', 'major', 'tired', 'happy', 'ready', 'beautiful', 'quiet', 'loud',
  'warm', 'cool', 'fresh', 'whole', 'several', 'delicious', 'steep',
  'gentle', 'muddy', 'windy', 'sunny', 'first', 'next', 'last',
])

/** past or participle form -> base lemma */
export const IRREGULAR_VERBS: Record<string, string> = {
  was: 'be', were: 'be', been: 'be', am: 'be', is: 'be', are: 'be',
  had: 'have', has: 'have', went: 'go', gone: 'go', made: 'make',
  built: 'build', set: 'set', put: 'put', woke: 'wake', woken: 'wake',
  lost: 'lose', fell: 'fall', fallen: 'fall', blew: 'blow', blown: 'blow',
  slept: 'sleep', saw: 'see', seen: 'see', left: 'leave', took: 'take',
  taken: 'take', got: 'get', gotten: 'get', came: 'come', ate: 'eat',
  eaten: 'eat', drove: 'drive', driven: 'drive', rode: 'ride',
  ridden: 'ride', swam: 'swim', swum: 'swim', ran: 'run', sat: 'sit',
  stood: 'stand', brought: 'bring', bought: 'buy', caught: 'catch',
  taught: 'teach', thought: 'think', found: 'find', held: 'hold',
  kept: 'keep', knew: 'know', known: 'know', grew: 'grow', grown: 'grow',
  threw: 'throw', thrown: 'throw', flew: 'fly', flown: 'fly',
  broke: 'break', broken: 'break', spoke: 'speak', spoken: 'speak',
  chose: 'choose', chosen: 'choose', froze: 'freeze', frozen: 'freeze',
  gave: 'give', given: 'give', heard: 'hear', hit: 'hit', hid: 'hide',
  hidden: 'hide', hung: 'hang', laid: 'lay', led: 'lead', lit: 'light',
  meant: 'mean', met: 'meet', paid: 'pay', rose: 'rise', risen: 'rise',
  said: 'say', sang: 'sing', sung: 'sing', sent: 'send', shone: 'shine',
  shot: 'shoot', showed: 'show', shown: 'show', shut: 'shut', sold: 'sell',
  spent: 'spend', swept: 'sweep', swung: 'swing', told: 'tell',
  tore: 'tear', torn: 'tear', understood: 'understand', wore: 'wear',
  worn: 'wear', won: 'win', wrote: 'write', written: 'write', dug: 'dig',
  felt: 'feel', fed: 'feed', fought: 'fight', forgot: 'forget',
  forgotten: 'forget', began: 'begin', begun: 'begin', did: 'do',
  done: 'do', cut: 'cut', let: 'let', slid: 'slide', stuck: 'stick',
  struck: 'strike', crept: 'creep', dealt: 'deal', drew: 'draw',
  drawn: 'draw', lay: 'lie', read: 'read',
}

/** Base lemmas recognized as verbs (regular morphology derives the rest). */
export const VERB_BASES = new Set([
  'be', 'have', 'do', 'go', 'make', 'build', 'set', 'put', 'wake', 'lose',
  'fall', 'blow', 'sleep', 'see', 'leave', 'take', 'get', 'come', 'eat',
  'drive', 'ride', 'swim', 'run', 'sit', 'stand', 'bring', 'buy', 'catch',
  'teach', 'think', 'find', 'hold', 'keep', 'know', 'grow', 'throw', 'fly',
  'break', 'speak', 'choose', 'freeze', 'give', 'hear', 'hit', 'hide',
  'hang', 'lie', 'lay', 'lead', 'light', 'mean', 'meet', 'pay', 'read',
  'rise', 'say', 'sing', 'send', 'shine', 'shoot', 'show', 'shut', 'sell',
  'spend', 'sweep', 'swing', 'tell', 'tear', 'understand', 'wear', 'win',
  'write', 'dig', 'feel', 'feed', 'fight', 'forget', 'begin', 'cut', 'let',
  'slide', 'stick', 'strike', 'creep', 'deal', 'draw', 'pack', 'reach',
  'pitch', 'roast', 'stop', 'start', 'rain', 'camp', 'hike', 'fish',
  'paddle', 'grill', 'snack', 'stroll', 'gaze', 'doze', 'stretch', 'track',
  'tape', 'huddle', 'assess', 'clear', 'patch', 'rebuild', 'listen', 'pace',
  'text', 'charge', 'refill', 'stack', 'mop', 'wade', 'shiver', 'chop',
  'heat', 'fry', 'season', 'serve', 'wash', 'scrub', 'relax', 'taste',
  'stir', 'sip', 'whisk', 'peel', 'grate', 'toast', 'simmer', 'rent',
  'sail', 'descend', 'spot', 'surface', 'haul', 'rinse', 'log', 'float',
  'drift', 'kick', 'breathe', 'signal', 'wave', 'squint', 'tread', 'bob',
  'glide', 'sow', 'water', 'weed', 'prune', 'harvest', 'compost', 'mulch',
  'rake', 'hoe', 'kneel', 'snip', 'stake', 'whistle', 'wander', 'weigh',
  'sweat', 'plan', 'return', 'tidy', 'unwind', 'help', 'call', 'walk',
  'talk', 'play', 'stay', 'look', 'move', 'turn', 'open', 'close', 'finish',
  'end', 'visit', 'watch', 'wait', 'carry', 'clean', 'cook', 'boil', 'bake',
  'arrive', 'enter', 'climb', 'cross', 'follow', 'explore', 'use',
  'arrange', 'check', 'head', 'frustrate', 'board', 'settle', 'load',
  'fill', 'pick', 'wrap', 'crawl', 'try', 'drop', 'gather', 'collect',
  'notice', 'smell', 'warm', 'share', 'laugh', 'smile', 'rest', 'nap',
  'chat', 'point', 'race', 'splash', 'slip', 'trip', 'storm', 'flood',
  'damage', 'restore', 'rescue', 'evacuate', 'survive', 'sustain', 'crush',
  'knock', 'bend', 'snap', 'thud', 'pinpoint', 'enforce', 'implement',
  'decide', 'place', 'happen', 'stumble', 'unpack', 'zip', 'unzip', 'fold',
  'unfold', 'hammer', 'secure', 'boilover', 'pour', 'slice', 'spread',
  'flip', 'toss', 'drain', 'marinate', 'skewer',
])

export const TIME_WORDS = new Set([
  'am', 'pm', 'noon', 'midnight', 'morning', 'evening', 'afternoon', 'night',
  "o'clock", 'dawn', 'dusk', 'sunrise', 'sunset',
])

export const WEEKDAYS = new Set([
  'monday', 'tuesday', 'wednesday', 'thursday', 'friday', 'saturday', 'sunday',
])

export const MONTHS = new Set([
  'january', 'february', 'march', 'april', 'may', 'june', 'july', 'august',
  'september', 'october', 'november', 'december',
])

export const LOCATION_CUES = new Set([
  'campground', 'park', 'valley', 'river', 'lake', 'beach', 'mountain',
  'trail', 'city', 'street', 'island', 'forest', 'bay', 'creek', 'falls',
  'canyon', 'ridge', 'harbor', 'springs', 'heights', 'county', 'coast',
  'peak', 'point', 'cove', 'reef', 'land', 'town', 'village',
])

export const ORG_CUES = new Set([
  'inc', 'corp', 'company', 'university', 'college', 'department', 'bureau',
  'agency', 'service', 'center', 'club', 'church', 'school', 'hospital',
  'association', 'society',
])

export const FIRST_NAMES = new Set([
  'john', 'mary', 'james', 'michael', 'sarah', 'emma', 'david', 'anna',
  'peter', 'laura', 'tom', 'lucy', 'sam', 'kate', 'ben', 'alice', 'jack',
  'rose', 'henry', 'clara', 'daniel', 'nora', 'leo', 'ruth', 'max', 'ella',
  'noah', 'ivy', 'ryan', 'june', 'owen', 'pearl', 'felix', 'iris', 'jake',
  'tessa', 'liam', 'maya', 'cole', 'dana',
])

export const HONORIFICS = new Set(['mr', 'mrs', 'ms', 'dr', 'prof', 'aunt', 'uncle'])
