#!/usr/bin/env python3
"""Builds the desk corpus and the plain desk text from a template grammar.

Every token's surface is looked up in the expanded seed lexicon by
(lemma, large tag), so gold tags always agree with the morphology.

    morphy expand > /tmp/forms.tsv
    tools/make_desk_corpus.py /tmp/forms.tsv data/
"""

import argparse
import random
import sys
from collections import defaultdict
from pathlib import Path


class Forms:
    def __init__(self, path):
        self.by_key = defaultdict(list)
        self.inf = {}
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            surface, lemma, tag = line.split("\t")
            self.by_key[(lemma, tag)].append(surface)
            if tag in ("VER INF", "VER AUX INF", "VER MOD INF"):
                self.inf[surface] = lemma
        for v in self.by_key.values():
            v.sort()

    def get(self, lemma, tag, ending=None):
        options = self.by_key.get((lemma, tag))
        if not options:
            raise KeyError(f"no form for {lemma} / {tag}")
        if ending is not None:
            options = [s for s in options if s.endswith(ending)]
            if not options:
                raise KeyError(f"no {ending}-form for {lemma} / {tag}")
        return options[0]

    def verb(self, inf):
        return self.inf[inf]


PERSONS = "Frau Mann Kind Vater Mutter Bruder Sohn Tochter Freund Freundin Lehrer Lehrerin Student Chef Kollege Kunde Junge Mädchen Meister Bauer Präsident Köchin Ärztin Onkel Mensch Held".split()
ANIMALS = "Hund Katze Vogel Pferd Affe Bär Fisch Tier".split()
THINGS = "Buch Brief Brot Essen Apfel Auto Bild Ball Blume Foto Glas Heft Kuchen Lied Messer Milch Obst Radio Ring Schuh Tasche Teller Tee Kaffee Wasser Wurst Zeitung Stuhl Tisch Tür Fenster Uhr Wagen Boot Schiff Segel Frage Antwort Geschichte Problem Spiel Film Wort Fehler".split()
PLACES = "Stadt Dorf Haus Garten Park Wald Schule Kirche Kino Theater Hotel Büro Zimmer Straße Hafen Land Berg Meer Insel Burg Feld Ufer Welt".split()
TIMES = "Abend Tag Woche Monat Jahr Sommer Winter".split()
MASS = {"Milch", "Obst", "Tee", "Kaffee", "Wasser", "Glück", "Musik", "Ruhe", "Regen"}
NAMES = "Peter Maria Anna Egon Müller Schmidt".split()
CITIES = "Berlin Frankfurt Hamburg".split()

ADJS = "alt arm billig dunkel edel einfach frei freundlich glücklich grün jung kalt klein klug kurz lang langsam laut leicht leise müde neu richtig rot ruhig schnell schwer schön spät stark teuer warm wichtig".split()
ADVS = "auch bald dann dort gern gestern heute hier immer jetzt leider manchmal morgen nie noch nur oft schon sehr sofort sogar vielleicht wieder zusammen".split()
TIME_ADVS = "bald dann gestern heute jetzt manchmal morgen oft wieder".split()

TRANSITIVE = "bauen brauchen bringen essen finden fragen holen hören kaufen kennen kochen küssen lieben machen meinen nehmen öffnen rufen schreiben sehen suchen tragen trinken wählen zahlen zeigen verkaufen besuchen bekommen lernen fassen legen retten schicken drehen verstehen".split()
PERSON_OBJ = "fragen rufen sehen suchen lieben kennen küssen besuchen retten meinen".split()
INTRANSITIVE = "arbeiten lachen leben weinen kommen gehen laufen fahren fliegen schlafen singen tanzen träumen reisen wandern feiern stehen sitzen liegen bleiben telefonieren spielen antworten".split()
SEIN_PERFECT = {"kommen", "gehen", "laufen", "fahren", "fliegen", "reisen", "wandern", "bleiben", "abfahren", "ankommen", "aufstehen"}
DATIVE_VERBS = "helfen danken antworten".split()
DITRANSITIVE = "geben schenken zeigen bringen schicken".split()
SEPARABLE = {"abfahren": ("fahren", "ab", False), "ankommen": ("kommen", "an", False), "aufstehen": ("stehen", "auf", False),
             "aufmachen": ("machen", "auf", True), "mitbringen": ("bringen", "mit", True), "vorstellen": ("stellen", "vor", True),
             "einnehmen": ("nehmen", "ein", True), "abspielen": ("spielen", "ab", True)}
MODALS = "können wollen müssen dürfen sollen".split()
LOC_PREP_DAT = "in an auf bei hinter neben vor unter über".split()
WITH_PREP = {"mit": "DAT", "von": "DAT", "nach": "DAT", "aus": "DAT", "seit": "DAT", "für": "AKK", "ohne": "AKK",
             "durch": "AKK", "gegen": "AKK"}
GEN_PREP = "wegen trotz während".split()
SUBORD = "daß weil wenn obwohl ob".split()

PRON = {  # person key -> (lemma, person, number, gender or None)
    "ich": ("ich", "1PE", "SIN", None), "du": ("du", "2PE", "SIN", None), "er": ("er", "3PE", "SIN", "MAS"),
    "sie": ("sie", "3PE", "SIN", "FEM"), "es": ("es", "3PE", "SIN", "NEU"), "wir": ("wir", "1PE", "PLU", None),
    "ihr": ("ihr", "2PE", "PLU", None), "sie_pl": ("sie", "3PE", "PLU", None),
}
POSS = ["mein", "dein", "sein", "ihr", "unser"]

# Adjective endings by declension, case, gender-or-plural.
WEAK = {("NOM", "MAS"): "e", ("NOM", "FEM"): "e", ("NOM", "NEU"): "e", ("AKK", "MAS"): "en", ("AKK", "FEM"): "e",
        ("AKK", "NEU"): "e"}
MIXED = {("NOM", "MAS"): "er", ("NOM", "FEM"): "e", ("NOM", "NEU"): "es", ("AKK", "MAS"): "en", ("AKK", "FEM"): "e",
         ("AKK", "NEU"): "es"}
STRONG = {("NOM", "MAS"): "er", ("NOM", "FEM"): "e", ("NOM", "NEU"): "es", ("AKK", "MAS"): "en", ("AKK", "FEM"): "e",
          ("AKK", "NEU"): "es", ("DAT", "MAS"): "em", ("DAT", "FEM"): "er", ("DAT", "NEU"): "em", ("GEN", "MAS"): "en",
          ("GEN", "FEM"): "er", ("GEN", "NEU"): "en", ("NOM", "PLU"): "e", ("AKK", "PLU"): "e", ("DAT", "PLU"): "en",
          ("GEN", "PLU"): "er"}


def adj_ending(decl, case, gender, number):
    key = (case, "PLU" if number == "PLU" else gender)
    if decl == "strong":
        return STRONG[key]
    if number == "PLU" or case in ("DAT", "GEN"):
        return "en"
    return (WEAK if decl == "weak" else MIXED)[key]


class Grammar:
    def __init__(self, forms, rng):
        self.f = forms
        self.r = rng
        self.gender = {}
        for (lemma, tag) in forms.by_key:
            parts = tag.split()
            if parts[0] == "SUB" and parts[-1] == "SIN":
                self.gender[lemma] = parts[2]

    def pick(self, seq):
        return self.r.choice(seq)

    def tok(self, lemma, tag, ending=None):
        return (self.f.get(lemma, tag, ending), tag)

    # -- noun phrases -------------------------------------------------------

    def np(self, case, pool=None, allow_plural=True, det=None):
        noun = self.pick(pool or (PERSONS + ANIMALS + THINGS))
        g = self.gender[noun]
        number = "PLU" if allow_plural and noun not in MASS and self.r.random() < 0.3 else "SIN"
        if det is None:
            weights = ["def"] * 5 + ["ind"] * 3 + ["poss"] * 2 + ["dem", "kein", "none"]
            det = self.pick(weights)
            if det == "ind" and number == "PLU":
                det = "none"
            if noun in MASS and det in ("ind",):
                det = "def"
        out = []
        gn = f"{g} {number}" if number == "SIN" else "PLU"
        if det == "def":
            out.append(self.tok("der", f"ART DEF {case} {gn}"))
            decl = "weak"
        elif det == "ind":
            out.append(self.tok("ein", f"ART IND {case} {g} SIN"))
            decl = "mixed"
        elif det == "poss":
            out.append(self.tok(self.pick(POSS), f"PRO POS {case} {gn} ATT"))
            decl = "mixed" if number == "SIN" else "weak"
        elif det == "dem":
            out.append(self.tok("dieser", f"PRO DEM {case} {gn} ATT"))
            decl = "weak"
        elif det == "kein":
            out.append(self.tok("kein", f"PRO IND {case} {gn} ATT"))
            decl = "mixed" if number == "SIN" else "weak"
        else:
            decl = "strong"
        if self.r.random() < 0.3:
            adj = self.pick(ADJS)
            end = adj_ending(decl, case, g, number)
            out.append(self.tok(adj, f"ADJ {case} {gn}", end))
        out.append(self.tok(noun, f"SUB {case} {g} {number}"))
        if case != "GEN" and self.r.random() < 0.08:
            out += self.genitive_attribute()
        return out, ("3PE", number)

    def genitive_attribute(self):
        noun = self.pick(PERSONS)
        g = self.gender[noun]
        gn = f"{g} SIN"
        return [self.tok("der", f"ART DEF GEN {gn}"), self.tok(noun, f"SUB GEN {g} SIN")]

    def subject(self, allow_pron=True):
        x = self.r.random()
        if allow_pron and x < 0.3:
            key = self.pick(list(PRON))
            lemma, person, number, gender = PRON[key]
            gpart = f" {gender}" if gender else ""
            tag = f"PRO PER {person} NOM{gpart} {number}"
            return [self.tok(lemma, tag)], (person, number)
        if x < 0.4:
            name = self.pick(NAMES)
            g = self.gender.get(name) or "MAS"
            return [self.tok(name, f"EIG NOM {self.name_gender(name)} SIN")], ("3PE", "SIN")
        return self.np("NOM", PERSONS + ANIMALS)

    def name_gender(self, name):
        for (lemma, tag) in self.f.by_key:
            if lemma == name and tag.startswith("EIG NOM"):
                return tag.split()[2]
        raise KeyError(name)

    def object_np(self, verb_inf):
        if verb_inf in PERSON_OBJ and self.r.random() < 0.5:
            if self.r.random() < 0.25:
                key = self.pick(["ich", "du", "er", "sie", "es", "wir", "ihr", "sie_pl"])
                lemma, person, number, gender = PRON[key]
                gpart = f" {gender}" if gender else ""
                return [self.tok(lemma, f"PRO PER {person} AKK{gpart} {number}")]
            return self.np("AKK", PERSONS + ANIMALS)[0]
        return self.np("AKK", THINGS)[0]

    def pp(self):
        x = self.r.random()
        if x < 0.35:
            prep = self.pick(LOC_PREP_DAT)
            return [self.tok(prep, f"PRP DAT")] + self.np("DAT", PLACES, det=self.pick(["def", "def", "poss", "dem"]))[0]
        if x < 0.5:
            place = self.pick(PLACES)
            g = self.gender[place]
            prep = "im" if g != "FEM" else "in"
            if g == "FEM":
                return [self.tok("in", "PRP DAT"), self.tok("der", f"ART DEF DAT FEM SIN"), self.tok(place, f"SUB DAT {g} SIN")]
            return [self.tok(prep, "PRP DAT"), self.tok(place, f"SUB DAT {g} SIN")]
        if x < 0.6:
            return [self.tok("in", "PRP DAT"), self.tok(self.pick(CITIES), "EIG DAT NEU SIN")]
        if x < 0.9:
            prep = self.pick(list(WITH_PREP))
            case = WITH_PREP[prep]
            pool = PERSONS + ANIMALS if prep in ("mit", "von", "für", "ohne", "gegen") else PLACES + THINGS
            if prep in ("nach", "seit"):
                pool = TIMES if prep == "seit" else PLACES
                if prep == "nach":
                    return [self.tok("nach", "PRP DAT"), self.tok(self.pick(CITIES), "EIG DAT NEU SIN")]
            return [self.tok(prep, f"PRP {case}")] + self.np(case, pool)[0]
        prep = self.pick(GEN_PREP)
        pool = THINGS if prep != "während" else TIMES
        return [self.tok(prep, "PRP GEN")] + self.np("GEN", pool, allow_plural=False, det="def")[0]

    def adv(self):
        return [self.tok(self.pick(ADVS), "ADV")]

    # -- verbs --------------------------------------------------------------

    def finite(self, inf, agr, tense=None, attached_prefix=True):
        person, number = agr
        tense = tense or ("PRT" if self.r.random() < 0.3 else "PRÄ")
        lemma = self.f.verb(inf)
        for kind in ("VER", "VER AUX", "VER MOD"):
            key = (lemma, f"{kind} {person} {number} {tense}")
            if key in self.f.by_key:
                return self.tok(*key)
        raise KeyError((inf, agr, tense))

    def participle(self, inf):
        lemma = self.f.verb(inf)
        for kind in ("VER PA2", "VER AUX PA2", "VER MOD PA2"):
            if (lemma, kind) in self.f.by_key:
                return self.tok(lemma, kind)
        raise KeyError(inf)

    def infinitive(self, inf):
        lemma = self.f.verb(inf)
        return self.tok(lemma, "VER INF")

    # -- clauses ------------------------------------------------------------

    def main_clause(self):
        kind = self.r.random()
        subj, agr = self.subject()
        if kind < 0.28:
            v = self.pick(TRANSITIVE)
            body = [self.finite(v, agr)] + self.object_np(v)
            if self.r.random() < 0.3:
                body += self.pp() if self.r.random() < 0.5 else self.adv()
            return self.front(subj, body)
        if kind < 0.42:
            v = self.pick(INTRANSITIVE)
            body = [self.finite(v, agr)]
            if self.r.random() < 0.4:
                body += self.adv()
            if self.r.random() < 0.6:
                body += self.pp()
            return self.front(subj, body)
        if kind < 0.52:  # perfect
            if self.r.random() < 0.5:
                v = self.pick(TRANSITIVE)
                aux = "haben"
                mid = self.object_np(v)
            else:
                v = self.pick(INTRANSITIVE + ["abfahren", "ankommen", "aufstehen"])
                aux = "sein" if v in SEIN_PERFECT else "haben"
                mid = self.adv() if self.r.random() < 0.4 else []
            return subj + [self.finite(aux, agr)] + mid + [self.participle(v)]
        if kind < 0.62:  # modal
            v = self.pick(TRANSITIVE + list(SEPARABLE))
            mid = self.object_np(v) if v not in SEPARABLE or SEPARABLE[v][2] else []
            return subj + [self.finite(self.pick(MODALS), agr, tense="PRÄ")] + mid + [self.infinitive(v)]
        if kind < 0.70:  # separable verb, particle at the end
            v = self.pick(list(SEPARABLE))
            base, particle, takes_obj = SEPARABLE[v]
            mid = self.object_np(v) if takes_obj else (self.adv() if self.r.random() < 0.5 else [])
            return subj + [self.finite(base, agr)] + mid + [self.tok(particle, "ZUS")]
        if kind < 0.78:
            v = self.pick(DATIVE_VERBS)
            return subj + [self.finite(v, agr)] + self.np("DAT", PERSONS)[0]
        if kind < 0.86:
            v = self.pick(DITRANSITIVE)
            return subj + [self.finite(v, agr)] + self.np("DAT", PERSONS)[0] + self.np("AKK", THINGS)[0]
        if kind < 0.93:  # copula
            x = self.r.random()
            if x < 0.5:
                adj = self.pick(ADJS)
                return subj + [self.finite("sein", agr), self.tok(adj, "ADJ ADV")]
            return subj + [self.finite("sein", agr)] + self.np("NOM", PERSONS + THINGS, allow_plural=False)[0]
        # demonstrative "das" as a pronoun
        x = self.pick(THINGS)
        g = self.gender[x]
        adj_np = self.np("NOM", THINGS, allow_plural=False, det="ind")[0]
        return [self.tok("der", "PRO DEM NOM NEU SIN PRO"), self.finite("sein", ("3PE", "SIN"))] + adj_np

    def front(self, subj, body):
        # Verb-second: either the subject or an adverbial comes first.
        if self.r.random() < 0.25:
            adv = [self.tok(self.pick(TIME_ADVS), "ADV")]
            return adv + [body[0]] + subj + body[1:]
        return subj + body

    def subordinate(self):
        conj = self.pick(SUBORD)
        subj, agr = self.subject()
        x = self.r.random()
        if x < 0.5:
            v = self.pick(TRANSITIVE)
            body = self.object_np(v) + [self.finite(v, agr)]
        elif x < 0.8:
            v = self.pick(INTRANSITIVE)
            body = (self.pp() if self.r.random() < 0.5 else []) + [self.finite(v, agr)]
        else:
            v = self.pick([k for k, s in SEPARABLE.items() if s[2]])
            body = self.object_np(v) + [self.finite(v, agr)]
        return [self.tok(conj, "KON UNT")] + subj + body

    def relative(self, head_gender, head_number):
        gn = f"{head_gender} SIN" if head_number == "SIN" else "PLU"
        v = self.pick(TRANSITIVE)
        rel = self.tok("der", f"PRO REL NOM {gn} PRO")
        return [rel] + self.object_np(v) + [self.finite(v, ("3PE", head_number))]

    def sentence(self):
        x = self.r.random()
        if x < 0.49:
            toks = self.main_clause()
            end = "."
        elif x < 0.55:  # opinion: "ich glaube , daß ..."
            key = self.pick(["ich", "ich", "ich", "wir", "du", "er", "sie"])
            lemma, person, number, gender = PRON[key]
            gpart = f" {gender}" if gender else ""
            subj = [self.tok(lemma, f"PRO PER {person} NOM{gpart} {number}")]
            verb = self.finite(self.pick(["meinen", "glauben", "hoffen", "denken", "sagen"]), (person, number), tense="PRÄ")
            clause = self.subordinate()
            clause[0] = self.tok("daß", "KON UNT")
            toks = subj + [verb, self.tok(",", "SZK")] + clause
            end = "."
        elif x < 0.67:
            toks = self.main_clause() + [self.tok(",", "SZK")] + self.subordinate()
            end = "."
        elif x < 0.73:
            toks = self.main_clause() + [self.tok("und", "KON NEB")] + self.main_clause()
            end = "."
        elif x < 0.79:  # relative clause on a subject
            noun = self.pick(PERSONS)
            g = self.gender[noun]
            head = [self.tok("der", f"ART DEF NOM {g} SIN"), self.tok(noun, f"SUB NOM {g} SIN")]
            v = self.pick(INTRANSITIVE)
            toks = head + [self.tok(",", "SZK")] + self.relative(g, "SIN") + [self.tok(",", "SZK"), self.finite(v, ("3PE", "SIN"))]
            end = "."
        elif x < 0.85:  # questions
            subj, agr = self.subject()
            v = self.pick(TRANSITIVE)
            if self.r.random() < 0.5:
                toks = [self.tok("was", "PRO INR AKK NEU SIN PRO"), self.finite(v, agr)] + subj
            else:
                toks = [self.finite(v, agr)] + subj + self.object_np(v)
            end = "?"
        elif x < 0.88:
            v = self.pick(INTRANSITIVE)
            toks = [self.tok("wer", "PRO INR NOM MAS SIN PRO"), self.finite(v, ("3PE", "SIN"))]
            end = "?"
        elif x < 0.92:  # imperative
            v = self.pick(TRANSITIVE)
            lemma = self.f.verb(v)
            toks = [self.tok(lemma, "VER SIN IMP")] + self.object_np(v)
            end = "!"
        elif x < 0.96:  # purpose clause with zu
            subj, agr = self.subject()
            v = self.pick(INTRANSITIVE)
            obj_v = self.pick(list(TRANSITIVE) + ["mitbringen", "aufmachen"])
            tail = self.object_np(obj_v)
            if obj_v in SEPARABLE:
                tail.append(self.tok(self.f.verb(obj_v), "VER EIZ"))
            else:
                tail += [self.tok("zu", "SKZ"), self.infinitive(obj_v)]
            toks = subj + [self.finite(v, agr), self.tok(",", "SZK"), self.tok("um", "KON INF")] + tail
            end = "."
        else:  # numbers
            subj, agr = self.subject()
            v = self.pick(TRANSITIVE)
            noun = self.pick([n for n in THINGS if n not in MASS])
            g = self.gender[noun]
            num = self.pick(["zwei", "drei", "vier", "fünf", "zehn"])
            toks = subj + [self.finite(v, agr), self.tok(num, "ZAL"), self.tok(noun, f"SUB AKK {g} PLU")]
            if self.r.random() < 0.5:
                toks += [self.tok("im", "PRP DAT"), self.tok("Jahr", "SUB DAT NEU SIN"),
                         (str(self.r.randint(1950, 1996)), "ZAN")]
            end = "."
        toks.append(self.tok(end, "SZE"))
        first, tag = toks[0]
        toks[0] = (first[0].upper() + first[1:], tag)
        return toks


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("forms", help="output of `morphy expand`")
    ap.add_argument("outdir")
    ap.add_argument("--seed", type=int, default=1996)
    ap.add_argument("--tokens", type=int, default=3000)
    ap.add_argument("--text-tokens", type=int, default=120000)
    args = ap.parse_args()

    forms = Forms(args.forms)
    out = Path(args.outdir)

    g = Grammar(forms, random.Random(args.seed))
    sentences, count = [], 0
    while count < args.tokens:
        s = g.sentence()
        sentences.append(s)
        count += len(s)
    lines = ["# desk corpus: template-generated German, large tag set",
             f"# generator: tools/make_desk_corpus.py --seed {args.seed}", ""]
    for s in sentences:
        lines += [f"{w}\t{t}" for w, t in s] + [""]
    (out / "desk_corpus.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    g = Grammar(forms, random.Random(args.seed + 1))
    text, count = [], 0
    while count < args.text_tokens:
        s = g.sentence()
        text.append(" ".join(w for w, _ in s))
        count += len(s)
    (out / "desk_text.txt").write_text("\n".join(text) + "\n", encoding="utf-8")
    print(f"{len(sentences)} sentences, {sum(len(s) for s in sentences)} corpus tokens; {count} text tokens",
          file=sys.stderr)


if __name__ == "__main__":
    main()
