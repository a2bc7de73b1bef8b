/** Deterministic synthetic story generator for adapter testing. */

function mulberry32(seed: number): () => number {
  let a = seed >>> 0
  return () => {
    a |= 0
    a = (a + 0x6d2b79f5) | 0
    let t = Math.imul(a ^ (a >>> 15), 1 | a)
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296
  }
}

interface Domain {
  templates: string[]
  fills: Record<string, string[]>
}

const DOMAINS: Domain[] = [
  {
    templates: [
      'We packed the {gear} and drove to the {place}.',
      'We reached the {campname} around noon.',
      'We pitched the tent near the {water}.',
      '{name} lit the fire.',
      'We roasted {food} after dinner.',
      'Once the rain stopped, we built a campfire.',
      'We hiked the {trailkind} before lunch.',
      'The {animal} crossed the trail.',
      'We put up the tent and unpacked the {gear}.',
      'On {day} we swam in the {water}.',
      'We slept early.',
      'It rained at night.',
    ],
    fills: {
      gear: ['backpack', 'cooler', 'bag', 'gear'],
      place: ['lake', 'valley', 'forest', 'ridge'],
      campname: ['Lost River Valley Campground', 'Silver Lake', 'Eagle Ridge Park'],
      water: ['river', 'lake', 'creek'],
      name: ['Anna', 'Tom', 'JS', 'Sarah'],
      food: ['marshmallows', 'sausages', 'corn'],
      trailkind: ['trail', 'canyon', 'ridge'],
      animal: ['dog', 'deer', 'fox'],
      day: ['Saturday', 'Sunday', 'Friday'],
    },
  },
  {
    templates: [
      'The storm hit the {placename} on {day}.',
      'The wind blew all night.',
      'A tree fell on the {thing}.',
      'We lost power around {time}.',
      'We taped the windows before the storm.',
      'When the rain stopped, we cleared the {debris}.',
      '{name} checked the roof.',
      'We stacked sandbags near the door.',
      'They restored power on {day}.',
      'We cleaned up the yard.',
      'We charged the phone.',
      'We huddled in the basement.',
    ],
    fills: {
      placename: ['Galveston', 'Cedar County', 'Port Bay'],
      day: ['Saturday', 'Sunday', 'Monday', 'Tuesday'],
      thing: ['garage', 'fence', 'shed'],
      time: ['2:10AM', '9:30PM', 'noon'],
      debris: ['debris', 'branches'],
      name: ['Maya', 'Cole', 'Dana', 'Ryan'],
    },
  },
  {
    templates: [
      'We chopped the {veg} for the soup.',
      '{name} heated the pan.',
      'We fried the {protein} with garlic.',
      'We served dinner at {time}.',
      'We washed the dishes after the meal.',
      'The soup simmered for an hour.',
      'We tasted the stew and added salt.',
      'We baked bread in the morning.',
      'We sipped wine on the porch.',
      'We swept the floor.',
    ],
    fills: {
      veg: ['onions', 'carrots', 'celery'],
      name: ['Lucy', 'Ben', 'Kate', 'Jack'],
      protein: ['eggs', 'rice', 'tofu'],
      time: ['noon', '6:30PM', '7:15PM'],
    },
  },
]

function fill(template: string, fills: Record<string, string[]>, rng: () => number): string {
  return template.replace(/\{(\w+)\}/g, (_, key: string) => {
    const options = fills[key]
    return options[Math.floor(rng() * options.length)]
  })
}

export function makeStory(seed: number): string {
  const rng = mulberry32(seed)
  const domain = DOMAINS[Math.floor(rng() * DOMAINS.length)]
  const count = 5 + Math.floor(rng() * 4)
  const sentences: string[] = []
  const used = new Set<number>()
  while (sentences.length < count) {
    const pick = Math.floor(rng() * domain.templates.length)
    if (used.has(pick) && used.size < domain.templates.length) continue
    used.add(pick)
    sentences.push(fill(domain.templates[pick], domain.fills, rng))
  }
  return sentences.join(' ') + '\n'
}

export function makeStories(count: number, seed = 20240): string[] {
  return Array.from({ length: count }, (_, i) => makeStory(seed + i))
}
