#!/usr/bin/env python3
"""Regenerates the bundled fixture corpora under data/fixtures/.

The fixtures are deterministic (fixed seed): 20 real-like and 200
synthetic-like dialogues (<= 500 words each) over a small VAD-style
lexicon, with per-problem counts 8/7/5 and 80/70/50 so ten matched
subsets of 20 exist. Synthetic dialogues are generated slightly
"flatter" (lower mood volatility) than real ones.
"""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "fixtures"

POSITIVE = [
    ("calm", 0.62, -0.55, 0.32), ("hope", 0.71, 0.08, 0.35), ("glad", 0.80, 0.30, 0.44),
    ("safe", 0.58, -0.42, 0.38), ("proud", 0.76, 0.36, 0.60), ("warm", 0.66, -0.06, 0.28),
    ("better", 0.54, -0.02, 0.33), ("relief", 0.63, -0.18, 0.30), ("strong", 0.52, 0.40, 0.68),
    ("ease", 0.57, -0.48, 0.25), ("happy", 0.85, 0.38, 0.48), ("love", 0.87, 0.45, 0.40),
    ("brave", 0.64, 0.42, 0.62), ("steady", 0.48, -0.30, 0.45), ("confident", 0.70, 0.28, 0.66),
    ("progress", 0.58, 0.18, 0.42), ("comfort", 0.60, -0.35, 0.30), ("trust", 0.68, 0.05, 0.44),
    ("gentle", 0.55, -0.38, 0.22), ("clear", 0.50, -0.10, 0.40),
]
NEGATIVE = [
    ("afraid", -0.72, 0.62, -0.50), ("panic", -0.80, 0.88, -0.62), ("worry", -0.60, 0.46, -0.35),
    ("sad", -0.68, -0.28, -0.38), ("tense", -0.42, 0.58, -0.22), ("guilt", -0.62, 0.28, -0.44),
    ("alone", -0.55, -0.12, -0.40), ("tired", -0.36, -0.46, -0.25), ("angry", -0.64, 0.74, 0.12),
    ("hurt", -0.66, 0.34, -0.42), ("scared", -0.74, 0.66, -0.52), ("anxious", -0.58, 0.64, -0.36),
    ("stress", -0.52, 0.60, -0.20), ("fear", -0.70, 0.60, -0.48), ("shame", -0.66, 0.22, -0.50),
    ("doubt", -0.45, 0.20, -0.34), ("stuck", -0.40, 0.12, -0.38), ("upset", -0.56, 0.50, -0.28),
    ("lonely", -0.60, -0.15, -0.42), ("nervous", -0.50, 0.58, -0.30),
]
NEUTRAL = [
    ("think", 0.12, 0.04, 0.18), ("talk", 0.22, 0.08, 0.16), ("week", 0.05, -0.04, 0.02),
    ("time", 0.08, 0.02, 0.06), ("work", 0.02, 0.14, 0.12), ("sleep", 0.24, -0.52, 0.05),
    ("family", 0.30, 0.10, 0.14), ("friend", 0.48, 0.16, 0.22), ("plan", 0.26, 0.12, 0.30),
    ("change", 0.10, 0.22, 0.09), ("feel", 0.15, 0.10, 0.08), ("notice", 0.14, 0.02, 0.15),
    ("thought", 0.06, 0.05, 0.10), ("question", 0.04, 0.10, 0.08), ("moment", 0.12, -0.02, 0.06),
    ("breathe", 0.32, -0.40, 0.18), ("practice", 0.22, 0.06, 0.24), ("home", 0.34, -0.12, 0.16),
    ("school", 0.05, 0.08, 0.04), ("morning", 0.18, -0.05, 0.08), ("evening", 0.16, -0.15, 0.05),
    ("people", 0.10, 0.06, 0.05), ("situation", -0.05, 0.12, 0.00), ("meeting", 0.02, 0.15, 0.06),
]
FILLER = [
    "um", "uh", "mmm", "okay", "yeah", "right", "so", "well", "like", "just",
    "really", "maybe", "kind", "of", "that", "it", "and", "the", "you", "know",
]

PROBLEMS_REAL = [
    ("anxiety and fear", 8),
    ("self-esteem and confidence issues", 7),
    ("relationships", 5),
]
PROBLEMS_SYNTH = [(label, count * 10) for label, count in PROBLEMS_REAL]


def lexicon_tsv():
    lines = ["term\tvalence\tarousal\tdominance"]
    for term, v, a, d in POSITIVE + NEGATIVE + NEUTRAL:
        lines.append(f"{term}\t{v}\t{a}\t{d}")
    return "\n".join(lines) + "\n"


def make_dialogue(rng, dlg_id, source, problem, volatility):
    n_turns = rng.randrange(8, 15)
    words_budget = rng.randrange(220, 460)
    per_turn = max(8, words_budget // n_turns)
    mood = rng.uniform(-0.6, 0.6)
    turns = []
    for t in range(n_turns):
        words = []
        for _ in range(per_turn + rng.randrange(-4, 5)):
            mood += (rng.uniform(-0.5, 0.5) - mood * 0.15) * volatility
            coin = rng.random()
            if coin < 0.28:
                pool = FILLER
            elif coin < 0.56:
                pool = [w for w, *_ in NEUTRAL]
            elif mood > 0:
                pool = [w for w, *_ in POSITIVE]
            else:
                pool = [w for w, *_ in NEGATIVE]
            words.append(rng.choice(pool))
        turns.append({
            "role": "counselor" if t % 2 == 0 else "client",
            "text": " ".join(words),
        })
    return {
        "id": dlg_id,
        "source": source,
        "metadata": {
            "problem": problem,
            "gender": "female" if rng.random() < 0.85 else "male",
            "attitude": rng.choices(["positive", "neutral", "negative"], [0.9, 0.07, 0.03])[0],
        },
        "turns": turns,
    }


def make_bundle(seed, source, problem_counts, volatility):
    rng = random.Random(seed)
    dialogues = []
    serial = 0
    for problem, count in problem_counts:
        for _ in range(count):
            dialogues.append(make_dialogue(rng, f"{source}_{serial:03d}", source, problem, volatility))
            serial += 1
    return {"dialogues": dialogues}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "vad_fixture.tsv").write_text(lexicon_tsv(), encoding="utf-8")
    real = make_bundle(101, "real", PROBLEMS_REAL, volatility=0.55)
    synth = make_bundle(202, "synthetic", PROBLEMS_SYNTH, volatility=0.35)
    (OUT / "real_fixture.json").write_text(json.dumps(real, indent=1), encoding="utf-8")
    (OUT / "synthetic_fixture.json").write_text(json.dumps(synth, indent=1), encoding="utf-8")
    n_words = [sum(len(t["text"].split()) for t in d["turns"]) for d in real["dialogues"] + synth["dialogues"]]
    print(f"wrote {len(real['dialogues'])} real + {len(synth['dialogues'])} synthetic dialogues "
          f"(words per dialogue: min {min(n_words)}, max {max(n_words)})")


if __name__ == "__main__":
    main()
