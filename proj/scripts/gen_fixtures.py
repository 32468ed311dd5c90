#!/usr/bin/env python3
# Copyright 2026 The Posibot Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled data files and the frozen test oracles.

Output is deterministic; rerunning leaves the tree unchanged.
"""

import csv
import io
import json
import math
import pathlib
import random

import pandas as pd

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
FIXTURES = ROOT / "tests" / "fixtures"


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def write_json(path, obj):
    write(path, json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


SYNONYMS = {
    "sad": ["unhappy", "down", "blue"],
    "happy": ["glad", "cheerful", "content"],
    "tired": ["exhausted", "drained", "weary"],
    "scared": ["afraid", "frightened", "fearful"],
    "angry": ["upset", "annoyed", "irritated"],
    "worried": ["anxious", "uneasy", "nervous"],
    "calm": ["relaxed", "peaceful", "settled"],
    "lonely": ["isolated", "alone"],
    "hard": ["difficult", "tough"],
    "bad": ["awful", "terrible"],
    "good": ["fine", "decent"],
    "big": ["large", "huge"],
    "small": ["little", "tiny"],
    "fast": ["quick", "rapid"],
    "think": ["believe", "suppose"],
    "feel": ["sense", "experience"],
    "want": ["wish", "desire"],
    "help": ["support", "assist"],
    "talk": ["speak", "chat"],
    "walk": ["stroll", "wander"],
    "sleep": ["rest", "nap"],
    "work": ["job", "labor"],
    "friend": ["companion", "pal"],
    "home": ["house", "place"],
    "day": ["daytime"],
    "night": ["evening"],
    "often": ["frequently", "regularly"],
    "sometimes": ["occasionally"],
    "really": ["truly", "genuinely"],
    "very": ["extremely", "quite"],
    "stressed": ["pressured", "strained", "tense"],
    "hopeful": ["optimistic", "positive"],
    "hopeless": ["despairing", "defeated"],
    "afraid": ["scared", "fearful"],
    "problem": ["issue", "trouble"],
    "mind": ["head", "thoughts"],
    "start": ["begin", "commence"],
    "stop": ["quit", "cease"],
    "try": ["attempt"],
    "keep": ["continue"],
    "thought": ["idea", "notion"],
    "heavy": ["weighty", "burdensome"],
    "quiet": ["silent", "still"],
    "people": ["folks", "others"],
    "class": ["lesson", "course"],
    "exam": ["test", "assessment"],
    "family": ["relatives", "household"],
    "week": ["fortnight"],
    "strong": ["sturdy", "tough"],
    "weak": ["feeble", "frail"],
    "nervous": ["jittery", "tense"],
    "panic": ["alarm", "dread"],
    "cry": ["weep", "sob"],
    "smile": ["grin", "beam"],
    "breathe": ["inhale", "exhale"],
    "focus": ["concentrate"],
    "remember": ["recall", "recollect"],
    "forget": ["overlook"],
    "lost": ["confused", "adrift"],
    "safe": ["secure", "protected"],
}

QWERTY = {
    "q": "wa", "w": "qeas", "e": "wrsd", "r": "etdf", "t": "ryfg", "y": "tugh",
    "u": "yihj", "i": "uojk", "o": "ipkl", "p": "ol", "a": "qwsz", "s": "weadzx",
    "d": "erfsxc", "f": "rtdgcv", "g": "tyfhvb", "h": "yugjbn", "j": "uihknm",
    "k": "iojlm", "l": "opk", "z": "asx", "x": "zsdc", "c": "xdfv", "v": "cfgb",
    "b": "vghn", "n": "bhjm", "m": "njk",
}

STOPWORDS = """a about above after again against all am an and any are as at be
because been before being below between both but by can could did do does doing
down during each few for from further had has have having he her here hers
herself him himself his how i i'm if in into is it it's its itself just me more
most my myself no nor not now of off on once only or other our ours ourselves
out over own same she should so some such than that the their theirs them
themselves then there these they this those through to too under until up very
was we were what when where which while who whom why will with would you your
yours yourself yourselves""".split()

VALENCE = {
    # Strong negatives.
    "hopeless": -0.9, "worthless": -0.9, "miserable": -0.85, "depressed": -0.8,
    "terrible": -0.75, "awful": -0.75, "panic": -0.7, "terrified": -0.8,
    "ashamed": -0.65, "lonely": -0.6, "sad": -0.6, "scared": -0.6,
    "afraid": -0.55, "anxious": -0.55, "angry": -0.55, "empty": -0.5,
    "overwhelmed": -0.6, "stressed": -0.5, "worried": -0.45, "upset": -0.45,
    "exhausted": -0.45, "cry": -0.5, "hurt": -0.6, "bad": -0.5, "nervous": -0.4,
    "unhappy": -0.55, "frightened": -0.6, "fearful": -0.55, "isolated": -0.5,
    # Mild negatives, below the subtle threshold.
    "tired": -0.2, "bored": -0.2, "meh": -0.15, "uneasy": -0.25, "restless": -0.25,
    "down": -0.2, "blah": -0.15, "drained": -0.25, "off": -0.1, "confused": -0.2,
    "weary": -0.25, "tense": -0.25, "annoyed": -0.25, "lost": -0.2,
    # Positives.
    "happy": 0.7, "glad": 0.6, "calm": 0.5, "relaxed": 0.5, "hopeful": 0.6,
    "grateful": 0.7, "proud": 0.6, "safe": 0.5, "good": 0.4, "great": 0.6,
    "better": 0.4, "okay": 0.2, "fine": 0.2, "cheerful": 0.6, "confident": 0.6,
    "peaceful": 0.5, "joyful": 0.7, "content": 0.4, "love": 0.7, "smile": 0.5,
    "strong": 0.4, "excited": 0.6,
}
NEGATORS = ["not", "no", "never", "don't", "can't", "isn't", "wasn't", "won't",
            "didn't", "hardly", "nothing"]

RULES = {
    "intents": {
        "crisis": ["suicide", "suicidal", "kill myself", "end my life", "self harm",
                   "hurt myself", "want to die", "take my own life"],
        "phobia_report": ["scared of", "afraid of", "terrified of", "fear of", "phobia"],
        "mood_report": ["i feel", "i'm feeling", "feeling", "sad", "depressed",
                        "anxious", "lonely", "stressed", "happy", "tired", "upset",
                        "angry", "worried", "down"],
        "greeting": ["hi", "hello", "hey", "good morning", "good afternoon",
                     "good evening"],
        "farewell": ["bye", "goodbye", "see you", "good night", "talk later"],
        "help_request": ["help", "advice", "what can i do", "what should i do"],
    },
    "phobias": {
        "spiders": {
            "normalized": "arachnophobia",
            "aliases": ["spider", "arachnophobia"],
            "steps": [
                "Look at a cartoon drawing of a spider for one minute.",
                "Look at photos of real spiders and name three of them.",
                "Watch a short video of a spider moving.",
                "Stand across the room from a spider in a closed jar.",
                "Hold the closed jar with a spider for thirty seconds.",
            ],
            "relaxation": ["Breathe in for four counts, hold for four, and breathe out for six."],
        },
        "heights": {
            "normalized": "acrophobia",
            "aliases": ["height", "high places", "acrophobia"],
            "steps": [
                "Look at photos taken from a tall building.",
                "Stand on a sturdy step stool for one minute.",
                "Look out of a second floor window.",
                "Stand on a balcony while holding the railing.",
            ],
            "relaxation": ["Press your feet into the floor and notice five things you can see."],
        },
        "social situations": {
            "normalized": "social anxiety",
            "aliases": ["social anxiety", "crowds", "parties", "public speaking"],
            "steps": [
                "Say hello to a cashier or neighbor.",
                "Ask a stranger a simple question, like the time.",
                "Join a small group conversation for five minutes.",
                "Share one opinion in a group setting.",
            ],
            "relaxation": ["Relax your shoulders and take three slow breaths."],
        },
        "flying": {
            "normalized": "aerophobia",
            "aliases": ["planes", "airplanes", "aerophobia"],
            "steps": [
                "Watch a video of a plane taking off.",
                "Visit an airport and watch planes for ten minutes.",
                "Sit in a flight simulator or a parked plane.",
                "Take a short domestic flight with a support person.",
            ],
            "relaxation": ["Tense and release each muscle group from your toes upward."],
        },
        "enclosed spaces": {
            "normalized": "claustrophobia",
            "aliases": ["small spaces", "elevators", "tight spaces", "claustrophobia"],
            "steps": [
                "Sit in a small room with the door open for five minutes.",
                "Sit in the same room with the door closed for two minutes.",
                "Ride an elevator one floor with a friend.",
                "Ride an elevator several floors on your own.",
            ],
            "relaxation": ["Count slowly backward from ten while breathing out."],
        },
    },
    "safety_phrases": ["i am safe", "i'm safe", "i'm okay now", "i am okay now"],
}

CRISIS_TEMPLATE = (
    "I'm really concerned about your safety, and I'm glad you told me. "
    "You don't have to go through this alone.\n"
    "\n"
    "Resources:\n"
    "- Call or text 988 (Suicide and Crisis Lifeline, US)\n"
    "- Call your local emergency number if you are in immediate danger\n"
    "- Find a helpline in your country: https://findahelpline.com\n"
    "\n"
    "I'll stay here with you. When you feel safe, you can tell me \"I am safe\"."
)

TEMPLATES = {
    "crisis": CRISIS_TEMPLATE,
    "default": "Thank you for sharing that. Tell me more about {summary_keywords}.",
    "ASSESSMENT|greeting|*": "Hello, I'm Posibot. How have you been feeling lately?",
    "ASSESSMENT|help_request|*": "I'm here to help. Could you tell me what has been on your mind?",
    "ASSESSMENT|other|*": "I'm listening. How does {summary_keywords} affect your day?",
    "ASSESSMENT|*|*": "I hear you. Can you say a bit more about {summary_keywords}?",
    "INTERVENTION|mood_report|negative": (
        "It sounds like {summary_keywords} has been weighing on you. "
        "Let's try something small together: {relaxation}"),
    "INTERVENTION|mood_report|positive": (
        "I'm glad to hear about {summary_keywords}. What helped you feel this way?"),
    "INTERVENTION|phobia_report|*": (
        "Fear of {phobia} is something we can work on step by step. "
        "Your next exercise: {exercise_step} If it feels like too much, try this: {relaxation}"),
    "INTERVENTION|*|negative": (
        "That sounds hard. Let's keep going gently. Next exercise: {exercise_step}"),
    "INTERVENTION|*|*": "Let's keep practicing. Next exercise: {exercise_step}",
    "CLOSING|*|*": "Thank you for talking with me today. Take care, and come back whenever you need.",
    "CRISIS|*|*": CRISIS_TEMPLATE,
}

LEXICON_PAIRS = [
    ("i", "yo"), ("you", "tú"), ("feel", "siento"), ("sad", "triste"),
    ("happy", "feliz"), ("tired", "cansado"), ("today", "hoy"),
    ("tomorrow", "mañana"), ("very", "muy"), ("not", "no"), ("always", "siempre"),
    ("never", "nunca"), ("friend", "amigo"), ("family", "familia"),
    ("work", "trabajo"), ("home", "casa"), ("night", "noche"),
    ("morning", "madrugada"), ("sleep", "dormir"), ("want", "quiero"),
    ("need", "necesito"), ("help", "ayuda"), ("talk", "hablar"),
    ("walk", "caminar"), ("with", "con"), ("my", "mi"), ("and", "y"),
    ("but", "pero"), ("the", "el"), ("a", "un"), ("is", "es"), ("am", "estoy"),
    ("calm", "tranquilo"), ("afraid", "asustado"), ("alone", "solo"),
    ("people", "gente"), ("school", "escuela"), ("heart", "corazón"),
    ("mind", "mente"), ("water", "agua"), ("music", "música"), ("book", "libro"),
    ("rain", "lluvia"), ("sun", "sol"), ("city", "ciudad"), ("dog", "perro"),
    ("cat", "gato"), ("good", "bueno"), ("bad", "malo"), ("now", "ahora"),
]


def lexicon_sentences(rng, count):
    words = [s for s, _ in LEXICON_PAIRS]
    out = []
    seen = set()
    while len(out) < count:
        n = rng.randint(4, 10)
        chosen = [rng.choice(words) for _ in range(n)]
        sentence = " ".join(chosen)
        sentence = sentence[0].upper() + sentence[1:] + rng.choice([".", "!", "?"])
        if rng.random() < 0.3:
            cut = rng.randint(2, n - 1)
            parts = sentence.split(" ")
            parts[cut - 1] += ","
            sentence = " ".join(parts)
        if sentence not in seen:
            seen.add(sentence)
            out.append(sentence)
    return out


SUBJECTS = ["I", "My friend", "My family", "My sister", "My brother", "Everyone at work",
            "The people in my class", "My partner", "My roommate", "My mother"]
FEELINGS = ["sad", "happy", "tired", "scared", "angry", "worried", "calm", "lonely",
            "stressed", "hopeful", "hopeless", "nervous", "lost", "safe", "weak", "strong"]
CONTEXTS = ["at work", "at home", "during the exam", "before the class", "every night",
            "this week", "after the call", "in the morning", "around people",
            "when I try to sleep", "on the bus", "at the party"]
FOLLOWUPS = ["I want to talk about it", "I keep thinking about the problem",
             "I cannot stop the thought", "I try to breathe and focus",
             "I often cry when I remember", "I smile when my friend calls",
             "It is really hard to start", "I think it is a big problem",
             "I need some help with my mind", "I walk home to feel calm",
             "The day feels very heavy", "Sometimes the night is quiet"]


def corpus_sentences(rng, count):
    out = []
    for _ in range(count):
        subject = rng.choice(SUBJECTS)
        verb = "feel" if subject == "I" else "feels"
        if subject == "The people in my class":
            verb = "feel"
        first = f"{subject} {verb} {rng.choice(['very ', 'really ', 'quite ', ''])}{rng.choice(FEELINGS)} {rng.choice(CONTEXTS)}"
        if rng.random() < 0.5:
            follow = rng.choice(FOLLOWUPS)
            if not follow.startswith("I "):
                follow = follow[0].lower() + follow[1:]
            sentence = f"{first}, and {follow}."
        else:
            sentence = f"{first}{rng.choice(['.', '!', '.'])}"
        out.append(sentence)
    return out


def sentence_of_length(rng, length, pool):
    # Words from `pool` joined by spaces, padded to exactly `length` code points
    # including the final period.
    words = []
    current = 0
    while True:
        word = rng.choice(pool)
        extra = len(word) + (1 if words else 0)
        if current + extra + 1 > length:
            break
        words.append(word)
        current += extra
    text = " ".join(words)
    remaining = length - 1 - len(text)
    if remaining > 0:
        filler = "x" * remaining if not words else " " + "o" * (remaining - 1)
        if remaining == 1 and words:
            words[-1] += "s"
            text = " ".join(words)
        else:
            text += filler
    text = text[0].upper() + text[1:] + "."
    assert len(text) == length, (len(text), length, text)
    return text


TOY_POOL = ["calm", "feel", "today", "walk", "slowly", "friend", "quiet", "morning",
            "garden", "small", "steps", "again", "breathe", "evening", "music"]
TOY_ORIGINAL_LENGTHS = [12, 30, 36, 37, 50, 73, 74, 110, 146, 400]
TOY_AUGMENTED_LENGTHS = [8, 20, 35, 40, 44, 72, 90, 108, 109, 150, 180, 219, 220, 300, 364, 365, 366]


def hand_bin(lengths, bins=10, max_len=365):
    edges = [i * max_len / bins for i in range(bins + 1)]
    counts = [0] * bins
    totals = [0] * bins
    for length in lengths:
        index = bins - 1
        for i in range(bins):
            if edges[i] <= length < edges[i + 1]:
                index = i
                break
        counts[index] += 1
        totals[index] += length
    labels = [f"{math.floor(edges[i])}–{math.floor(edges[i + 1])}" for i in range(bins)]
    means = [totals[i] / counts[i] if counts[i] else None for i in range(bins)]
    return {"edges": edges, "labels": labels, "counts": counts, "mean_length": means,
            "total_sentences": len(lengths)}


POS_WORDS = ["grateful", "calm", "hopeful", "proud", "relaxed", "cheerful", "confident",
             "peaceful", "joyful", "content"]
NEG_WORDS = ["hopeless", "worthless", "exhausted", "miserable", "anxious", "lonely",
             "ashamed", "overwhelmed", "empty", "restless"]
NEUTRAL = ["today", "work", "school", "week", "family", "friends", "morning", "evening",
           "again", "lately", "really", "about", "feel", "felt", "i", "my", "the", "at",
           "after", "with", "home", "class", "weekend", "news", "call"]


def synthetic_corpus(rng):
    rows = []
    for i in range(200):
        label = "positive" if i % 2 == 0 else "negative"
        own = POS_WORDS if label == "positive" else NEG_WORDS
        other = NEG_WORDS if label == "positive" else POS_WORDS
        words = rng.sample(own, rng.randint(2, 3))
        words += [rng.choice(NEUTRAL) for _ in range(rng.randint(4, 7))]
        if rng.random() < 0.05:
            words.append(rng.choice(other))
        rng.shuffle(words)
        text = " ".join(words)
        rows.append({"id": f"s{i:03d}", "text": text[0].upper() + text[1:] + ".",
                     "sentiment": label})
    return rows


CATEGORIES = ["Mood", "Behavior", "Phobias", "Anxiety", "Stress"]


def demographics(rng):
    rows = []
    texts = ["I keep worrying about small things", "Work has been a lot lately",
             "I avoid going out, even with friends", "My sleep is uneven",
             "Crowds make me uneasy", "I feel flat most mornings",
             "Deadlines pile up, again and again", "I snap at people more than before"]
    ages = [19, 22, 24, 25, 27, 30, 33, 35, 38, 41, 44, 45, 47, 50, 53, 55, 58, 63, 70]
    for i in range(34):
        gender = "male" if i % 2 == 0 else "female"
        rows.append({
            "id": f"d{i + 1:02d}",
            "text": rng.choice(texts),
            "label": "survey",
            "age": str(rng.choice(ages)),
            "gender": gender,
            "emotion_category": rng.choice(CATEGORIES),
            "level": f"{rng.randint(0, 200) / 2:g}",
        })
    # Rows the analysis must exclude or route elsewhere.
    rows.append({"id": "d35", "text": "I feel tense before school", "label": "survey",
                 "age": "16", "gender": "male", "emotion_category": "Anxiety", "level": "64"})
    rows.append({"id": "d36", "text": "Exams worry me", "label": "survey",
                 "age": "17", "gender": "female", "emotion_category": "Stress", "level": "71.5"})
    rows.append({"id": "d37", "text": "I do not like to say", "label": "survey",
                 "age": "29", "gender": "nonbinary", "emotion_category": "Mood", "level": "40"})
    rows.append({"id": "d38", "text": "Everything is fine", "label": "survey",
                 "age": "34", "gender": "male", "emotion_category": "Mood", "level": "140"})
    rows.append({"id": "d39", "text": "I cannot sit still", "label": "survey",
                 "age": "42", "gender": "female", "emotion_category": "Restlessness",
                 "level": "55"})
    rows.append({"id": "d40", "text": "Heights, planes, and elevators scare me", "label": "survey",
                 "age": "", "gender": "female", "emotion_category": "Phobias", "level": "80"})
    return rows


def to_csv(rows, columns):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def emotion_oracle(csv_text):
    df = pd.read_csv(io.StringIO(csv_text), dtype={"age": "Int64"})
    df = df[df["emotion_category"].isin(CATEGORIES)]
    df = df[(df["level"] >= 0) & (df["level"] <= 100)]
    df = df[df["age"].notna() & (df["age"] >= 18)]
    df = df.assign(age_group=pd.cut(df["age"].astype(int), bins=[17, 25, 35, 45, 55, 200],
                                    labels=["18–25", "26–35", "36–45", "46–55", "56+"]))
    out = {}
    for gender in ["male", "female"]:
        sub = df[df["gender"] == gender]
        table = sub.groupby(["age_group", "emotion_category"], observed=True)["level"].mean()
        cells = []
        for group in ["18–25", "26–35", "36–45", "46–55", "56+"]:
            row = []
            for category in CATEGORIES:
                value = table.get((group, category))
                row.append(None if value is None or pd.isna(value) else float(value))
            cells.append(row)
        out[gender] = {"cells": cells, "used_records": int(len(sub))}
    return out


def main():
    rng = random.Random(20240917)

    write_json(DATA / "synonyms.json", SYNONYMS)
    write_json(DATA / "qwerty.json", QWERTY)
    write(DATA / "stopwords.txt", "# English stopwords, one per line\n" + "\n".join(STOPWORDS) + "\n")
    write_json(DATA / "valence.json", {"valences": VALENCE, "negators": NEGATORS, "threshold": 0.3})
    write_json(DATA / "rules.json", RULES)
    write_json(DATA / "templates.json", TEMPLATES)

    targets = [t for _, t in LEXICON_PAIRS]
    assert len(LEXICON_PAIRS) == 50 and len(set(targets)) == 50
    write_json(DATA / "lexicon_en_es.json",
               {"invertible": True, "pairs": [list(p) for p in LEXICON_PAIRS]})
    write(DATA / "lexicon_sentences.txt", "\n".join(lexicon_sentences(rng, 100)) + "\n")

    write(DATA / "sentences_1000.txt", "\n".join(corpus_sentences(rng, 1000)) + "\n")

    original = [sentence_of_length(rng, n, TOY_POOL) for n in TOY_ORIGINAL_LENGTHS]
    augmented = [sentence_of_length(rng, n, TOY_POOL) for n in TOY_AUGMENTED_LENGTHS]
    write(DATA / "toy_original.txt", "\n".join(original) + "\n")
    write(DATA / "toy_augmented.txt", "\n".join(augmented) + "\n")
    write_json(FIXTURES / "lengths_oracle.json", {
        "original": hand_bin([len(s) for s in original]),
        "augmented": hand_bin([len(s) for s in augmented]),
    })

    corpus = synthetic_corpus(rng)
    write(DATA / "synthetic_corpus.csv", to_csv(corpus, ["id", "text", "sentiment"]))
    write_json(DATA / "schemas" / "synthetic.json",
               {"columns": {"id": "id", "text": "text", "label": "sentiment"}})

    demo_rows = demographics(rng)
    demo_csv = to_csv(demo_rows, ["id", "text", "label", "age", "gender",
                                  "emotion_category", "level"])
    write(DATA / "demographics.csv", demo_csv)
    write_json(FIXTURES / "emotion_oracle.json", emotion_oracle(demo_csv))

    write(DATA / "samples" / "suicide_watch_sample.csv", (
        ",text,class\n"
        "0,\"I can't see a way forward, and I keep thinking about ending it\",suicide\n"
        "1,Had a great time at the lake with my cousins,non-suicide\n"
        "2,\"Nobody would notice if I was gone.\nI've written letters.\",suicide\n"
        "3,Anyone else excited for the new season?,non-suicide\n"
        "4,,non-suicide\n"
        "5,\"My teacher said \"\"good job\"\" today\",non-suicide\n"
        "6,I feel like a burden to everyone around me,suicide\n"
        "7,Just finished my first 10k run,non-suicide\n"
    ))
    write_json(DATA / "schemas" / "suicide_watch.json", {
        "columns": {"id": "", "text": "text", "label": "class"},
        "label_map": {"suicide": "suicidal", "non-suicide": "non-suicidal"},
    })
    write(DATA / "samples" / "mental_health_sentiment_sample.csv", (
        ",statement,status\n"
        "0,I slept well and feel ready for the day,Normal\n"
        "1,Nothing matters and I can't get out of bed,Depression\n"
        "2,My heart races whenever my phone rings,Anxiety\n"
        "3,Too many deadlines this month,Stress\n"
        "4,Mood swings are wearing me out,Bipolar\n"
        "5,Lunch with friends was nice,Normal\n"
        "6,I feel empty most days,Depression\n"
        "7,Some days I just do not know,\n"
        "8,   ,Normal\n"
    ))
    write_json(DATA / "schemas" / "mental_health_sentiment.json", {
        "columns": {"id": "", "text": "statement", "label": "status"},
        "label_map": {"Normal": "Normal", "Depression": "Depression", "Anxiety": "Other",
                      "Stress": "Other", "Bipolar": "Other", "Suicidal": "Other",
                      "Personality disorder": "Other"},
    })


if __name__ == "__main__":
    main()
