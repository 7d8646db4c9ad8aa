#!/usr/bin/env python3
"""Regenerate the bundled sample subject under data/sports.

Output is deterministic for a given seed; rerunning must not change the
golden prediction files in tests/data/golden.
"""
import argparse
import json
import random
from pathlib import Path

TEAMS = ["Rovers", "Harbor City", "Northfield", "the Falcons", "Eastbrook", "the Comets", "Westvale", "the Miners"]
PLAYERS = ["Alvarez", "Brennan", "Cho", "Dubois", "Okafor", "Kowalski", "Lindqvist", "Moreau", "Nakamura", "Patel"]
VENUES = ["the stadium", "the riverside ground", "the arena", "the dome", "the old park"]
NOUNS = ["goal", "penalty", "coach", "striker", "keeper", "season", "injury", "transfer", "league", "trophy",
         "referee", "crowd", "defender", "contract", "playoff", "tournament", "captain", "fixture", "derby", "record"]

OPENERS = [
    "{team} beat {team2} {a}-{b} on Saturday at {venue}.",
    "{player} scored twice as {team} won at {venue}.",
    "{team} and {team2} drew {a}-{a} in a tense {noun} match.",
    "The {noun} between {team} and {team2} ended late on Sunday.",
]
MIDDLES = [
    "The {noun} came after a long {noun2} review by the officials.",
    "{player} said the {noun} changed the shape of the game.",
    "Fans in {venue} sang through the second half.",
    "The {noun} was the first of the {noun2} for {team}.",
    "A late {noun} from {player} settled the contest.",
    "The {noun2} left {team2} short of options in defence.",
    "Officials confirmed the {noun} would stand despite protests.",
    "Dr. {player} treated the {noun2} on the touchline.",
    "{team2} now sit third in the {noun} table.",
    "Both sides expect a busy {noun2} window.",
]
CLOSERS = [
    "{team} travel to {venue} next week.",
    "The {noun} resumes after the international break.",
    "{player} is expected to sign a new {noun2} soon.",
    "Tickets for the {noun} go on sale on Monday.",
]


def sentence(rng, pool):
    t1, t2 = rng.sample(TEAMS, 2)
    n1, n2 = rng.sample(NOUNS, 2)
    s = rng.choice(pool).format(team=t1, team2=t2, player=rng.choice(PLAYERS), venue=rng.choice(VENUES),
                                noun=n1, noun2=n2, a=rng.randint(0, 4), b=rng.randint(0, 4))
    return s[0].upper() + s[1:]


def article(rng, corpus_id, n):
    count = rng.randint(3, 9)
    sents = [sentence(rng, OPENERS)] + [sentence(rng, MIDDLES) for _ in range(count - 2)] + [sentence(rng, CLOSERS)]
    paragraphs, i = [], 0
    while i < len(sents):
        size = rng.randint(1, 3)
        paragraphs.append(" ".join(sents[i:i + size]))
        i += size
    return {
        "id": f"{corpus_id}-{n:03d}",
        "corpus_id": corpus_id,
        "subject": "Sports",
        "title": sents[0].rstrip("."),
        "body": "\n\n".join(paragraphs),
    }, count


def write_eval(rng, out, articles, counts):
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "annotations.csv", "w", encoding="utf-8", newline="\n") as f:
        f.write("article_id,pick1,pick2,pick3,pick4,pick5\n")
        for a in articles[:10]:
            m = counts[a["id"]]
            centre = rng.randint(1, m)
            picks = [min(m, max(1, centre + rng.choice([-1, 0, 0, 1, 2]))) for _ in range(5)]
            f.write(a["id"] + "," + ",".join(map(str, picks)) + "\n")
    with open(out / "ratings.csv", "w", encoding="utf-8", newline="\n") as f:
        f.write("article_id,method,rating,break_position_fraction\n")
        for a in articles[:20]:
            for method, bias in (("slm-article", 1), ("slm-corpus", 0), ("one-sentence", -1)):
                rating = min(7, max(1, 4 + bias + rng.randint(-2, 2)))
                f.write(f"{a['id']},{method},{rating},{rng.randint(0, 19) / 20 + 0.01:.2f}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "sports"))
    ap.add_argument("--seed", type=int, default=20140605)
    ap.add_argument("--articles", type=int, default=60)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    corpus_id = "sports-wire"
    made = [article(rng, corpus_id, n) for n in range(1, args.articles + 1)]
    articles = [a for a, _ in made]
    counts = {a["id"]: c for a, c in made}
    with open(out / f"{corpus_id}.jsonl", "w", encoding="utf-8", newline="\n") as f:
        for a in articles:
            f.write(json.dumps(a, ensure_ascii=False, separators=(",", ":")) + "\n")
    write_eval(rng, out.parent / "eval", articles, counts)


if __name__ == "__main__":
    main()
