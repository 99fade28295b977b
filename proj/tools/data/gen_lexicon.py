#!/usr/bin/env python3
"""Writes data/lexicon.tsv, the shipped seed root lexicon.

Run from the repository root: python3 tools/data/gen_lexicon.py
"""
import os

U = "flags=umlaut_in_paradigm"
S = "flags=ss_sharp_shift"
US = "flags=umlaut_in_paradigm,ss_sharp_shift"
NOGE = "flags=no_ge_participle"

entries = []


def add(root, pos, cls, *kv):
    entries.append((root, pos, cls, ",".join(k for k in kv if k)))


def nouns(gender, cls, words, *kv):
    for w in words.split():
        add(w, "SUB", cls, f"gender={gender}", *kv)


# Nouns
nouns("MAS", "n_e", "Tisch Brief Hund Arm Berg Fisch Ring Schuh", )
nouns("MAS", "n_e", "Fluß Kuß Fuß", US)
nouns("MAS", "n_e_s", "Tag Weg Freund Abend Monat Film Preis", )
nouns("MAS", "n_e_s", "Baum Zug Sohn Stuhl Platz Kopf Traum Ball", U)
nouns("MAS", "n_e_dat", "Wind", )
nouns("MAS", "n_er_s", "Mann Wald", U)
nouns("MAS", "n_0", "Meister Lehrer Himmel Fehler Sommer Winter Onkel Teller")
nouns("MAS", "n_0", "Vater Bruder Apfel Vogel", U)
nouns("MAS", "n_0n", "Wagen Kuchen Regen")
nouns("MAS", "n_0n", "Hafen Garten", U)
nouns("MAS", "n_s", "Park Tee Kaffee Chef")
nouns("MAS", "n_weak_n", "Bauer Junge Kollege Name Affe Kunde")
nouns("MAS", "n_weak_en", "Mensch Student Held Bär Präsident Fürst")
nouns("FEM", "n_en_fem", "Frau Zeit Fahrt Tür Welt Arbeit Zeitung Uhr Antwort Bahn Burg Schrift")
nouns("FEM", "n_n_fem", "Winde Blume Katze Schule Straße Sprache Reise Tasche Kirche Woche Farbe Stunde Frage Geschichte Insel")
nouns("FEM", "n_e_fem", "Stadt Hand Nacht Wand Kraft Wurst", U)
nouns("FEM", "n_0_fem", "Mutter Tochter", U)
nouns("FEM", "n_nen_fem", "Lehrerin Freundin Köchin Ärztin")
nouns("FEM", "n_sg_fem", "Musik Milch Liebe Ruhe")
nouns("NEU", "n_er", "Haus Glas Dorf Buch Land Wort", U)
nouns("NEU", "n_er_s", "Kind Bild Lied Feld")
nouns("NEU", "n_e_s", "Schiff Jahr Brot Spiel Tier Boot Haar Heft Pferd Meer Problem")
nouns("NEU", "n_0", "Segel Fenster Zimmer Theater Messer Wetter Ufer")
nouns("NEU", "n_0n", "Essen Mädchen Leben Zeichen Wasser")
nouns("NEU", "n_s", "Auto Kino Hotel Radio Büro Foto")
nouns("NEU", "n_sg", "Obst Glück Wissen")
for name, g in [("Peter", "MAS"), ("Maria", "FEM"), ("Anna", "FEM"), ("Egon", "MAS"),
                ("Berlin", "NEU"), ("Frankfurt", "NEU"), ("Hamburg", "NEU"), ("Müller", "MAS"), ("Schmidt", "MAS")]:
    add(name, "EIG", "eig", f"gender={g}")

# Verbs: the root is the simplex infinitive
for v in ("spielen meinen machen sagen kaufen lieben leben hören suchen wohnen lernen holen zeigen stellen "
          "legen fragen glauben brauchen kochen lachen weinen schenken wählen fühlen führen danken bauen "
          "kennen träumen zahlen schicken hoffen drehen").split():
    add(v, "VER", "v_weak")
for v in "arbeiten warten reden antworten öffnen achten retten".split():
    add(v, "VER", "v_weak_t")
for v in "reisen tanzen grüßen setzen".split():
    add(v, "VER", "v_weak_s")
add("küssen", "VER", "v_weak_s", S)
add("fassen", "VER", "v_weak_s", S)
for v in "flattern wandern feiern ändern".split():
    add(v, "VER", "v_weak_ern")
for v in "telefonieren studieren probieren reparieren".split():
    add(v, "VER", "v_weak", NOGE)
add("spielen", "VER", "v_weak", "prefix=ver", "prefix_kind=inseparable")
add("spielen", "VER", "v_weak", "prefix=ab", "prefix_kind=separable")
add("kaufen", "VER", "v_weak", "prefix=ver", "prefix_kind=inseparable")
add("suchen", "VER", "v_weak", "prefix=be", "prefix_kind=inseparable")
add("machen", "VER", "v_weak", "prefix=auf", "prefix_kind=separable")
add("zählen", "VER", "v_weak", "prefix=er", "prefix_kind=inseparable")
add("hören", "VER", "v_weak", "prefix=ge", "prefix_kind=inseparable")
add("stellen", "VER", "v_weak", "prefix=vor", "prefix_kind=separable")

STRONG = {
    "nehmen": "override.pres23_stem=nimm,override.pret_stem=nahm,override.part2=genommen,override.imp_sg=nimm,override.imp_sg2=nimm",
    "geben": "override.pres23_stem=gib,override.pret_stem=gab,override.part2=gegeben,override.imp_sg=gib,override.imp_sg2=gib",
    "sehen": "override.pres23_stem=sieh,override.pret_stem=sah,override.part2=gesehen,override.imp_sg=sieh,override.imp_sg2=sieh",
    "sprechen": "override.pres23_stem=sprich,override.pret_stem=sprach,override.part2=gesprochen,override.imp_sg=sprich,override.imp_sg2=sprich",
    "helfen": "override.pres23_stem=hilf,override.pret_stem=half,override.part2=geholfen,override.imp_sg=hilf,override.imp_sg2=hilf",
    "fahren": U + ",override.pret_stem=fuhr,override.part2=gefahren",
    "tragen": U + ",override.pret_stem=trug,override.part2=getragen",
    "schlafen": U + ",override.pret_stem=schlief,override.part2=geschlafen",
    "laufen": U + ",override.pret_stem=lief,override.part2=gelaufen",
    "gehen": "override.pret_stem=ging,override.part2=gegangen",
    "kommen": "override.pret_stem=kam,override.part2=gekommen",
    "schreiben": "override.pret_stem=schrieb,override.part2=geschrieben",
    "bleiben": "override.pret_stem=blieb,override.part2=geblieben",
    "trinken": "override.pret_stem=trank,override.part2=getrunken",
    "singen": "override.pret_stem=sang,override.part2=gesungen",
    "rufen": "override.pret_stem=rief,override.part2=gerufen",
    "stehen": "override.pret_stem=stand,override.part2=gestanden",
    "liegen": "override.pret_stem=lag,override.part2=gelegen",
    "fliegen": "override.pret_stem=flog,override.part2=geflogen",
    "sitzen": "override.pret_stem=saß,override.part2=gesessen,override.pres_2sg=sitzt",
    "essen": "override.pres23_stem=iß,override.pres_2sg=ißt,override.pret_stem=aß,override.pret_2sg=aßest,override.part2=gegessen,override.imp_sg=iß,override.imp_sg2=iß",
}
for v, kv in STRONG.items():
    add(v, "VER", "v_strong", kv)
for v, kv in {
    "finden": "override.pret_stem=fand,override.part2=gefunden",
    "winden": "override.pret_stem=wand,override.part2=gewunden",
    "bitten": "override.pret_stem=bat,override.part2=gebeten",
}.items():
    add(v, "VER", "v_strong_t", kv)
add("nehmen", "VER", "v_strong", "prefix=ein", "prefix_kind=separable", STRONG["nehmen"])
add("kommen", "VER", "v_strong", "prefix=an", "prefix_kind=separable", STRONG["kommen"])
add("kommen", "VER", "v_strong", "prefix=be", "prefix_kind=inseparable", STRONG["kommen"])
add("stehen", "VER", "v_strong", "prefix=auf", "prefix_kind=separable", STRONG["stehen"])
add("stehen", "VER", "v_strong", "prefix=ver", "prefix_kind=inseparable", STRONG["stehen"])
add("fahren", "VER", "v_strong", "prefix=ab", "prefix_kind=separable", STRONG["fahren"])
add("bringen", "VER", "v_mixed", "override.pret_stem=brach")
add("denken", "VER", "v_mixed", "override.pret_stem=dach")
add("bringen", "VER", "v_mixed", "prefix=mit", "prefix_kind=separable", "override.pret_stem=brach")
add("sein", "VER AUX", "aux_sein")
add("haben", "VER AUX", "aux_haben")
add("werden", "VER AUX", "aux_werden")
for v, c in [("können", "mod_koennen"), ("wollen", "mod_wollen"), ("müssen", "mod_muessen"),
             ("dürfen", "mod_duerfen"), ("sollen", "mod_sollen"), ("mögen", "mod_moegen")]:
    add(v, "VER MOD", c)

# Adjectives
for a in "klein schön schnell langsam grün freundlich glücklich wichtig richtig einfach schwer billig ruhig".split():
    add(a, "ADJ", "a_st")
for a in "jung klug lang warm stark arm".split():
    add(a, "ADJ", "a_st", U)
for a in "neu rot laut leicht frei spät".split():
    add(a, "ADJ", "a_est")
for a in "alt kurz kalt".split():
    add(a, "ADJ", "a_est", U)
for a in "edel dunkel teuer".split():
    add(a, "ADJ", "a_el")
for a in "leise müde".split():
    add(a, "ADJ", "a_e")

# Closed classes
add("der", "ART", "art_def")
add("ein", "ART", "art_ind")
add("der", "PRO DEM", "dem_der")
add("der", "PRO REL", "rel_der")
for r in ("dies", "jen", "welch"):
    add(r, "PRO DEM" if r != "welch" else "PRO INR", "derwort")
add("welch", "PRO REL", "derwort")
add("all", "PRO IND", "derwort")
add("jed", "PRO IND", "derwort")
add("manch", "PRO IND", "derwort")
for r in ("mein", "dein", "sein", "ihr", "unser", "euer"):
    add(r, "PRO POS", "einwort")
add("kein", "PRO IND", "einwort")
for c in ("per_ich", "per_du", "per_er", "per_sie", "per_es", "per_wir", "per_ihr", "per_Sie"):
    add(c[4:], "PRO PER", c)
for c in ("ref_sich", "ref_mich", "ref_dich", "ref_uns", "ref_euch"):
    add(c[4:], "PRO REF", c)
add("wer", "PRO INR", "inr_wer")
add("was", "PRO INR", "inr_was")

UNINFL = {
    "ADV": "nicht sehr heute gestern morgen hier dort oft immer schon noch auch nur gern jetzt dann bald wieder sofort leider manchmal sogar vielleicht nie zusammen",
    "ADV PRO": "damit dadurch darauf davon dabei dafür",
    "KON UNT": "daß da weil ob wenn obwohl",
    "KON NEB": "und oder aber sondern",
    "KON INF": "um ohne",
    "KON VGL": "als wie denn",
    "KON PRI": "desto je",
    "SKZ": "zu",
    "ZUS": "ab an auf ein mit vor",
    "INJ": "oh ach ja nein",
    "ZAL": "eins zwei drei vier fünf zehn hundert tausend",
    "ABK": "usw. Dr. z.B.",
    "SZD": ":",
    "SZE": ". ! ?",
    "SZG": "-",
    "SZK": ",",
    "SZS": ";",
    "SZN": "( ) /",
}
for pos, words in UNINFL.items():
    for w in words.split():
        add(w, pos, "uninfl")
for w in "in an auf vor über unter neben hinter zwischen".split():
    add(w, "PRP", "prp_dat_akk")
for w in "mit nach bei seit von zu aus im am zum zur vom beim".split():
    add(w, "PRP", "prp_dat")
for w in "für durch gegen ohne um".split():
    add(w, "PRP", "prp_akk")
for w in "während wegen trotz".split():
    add(w, "PRP", "prp_gen")

out = os.path.join(os.path.dirname(__file__), "..", "..", "data", "lexicon.tsv")
seen = set()
with open(out, "w", encoding="utf-8") as fh:
    fh.write("# root\tpos\tclass_id\tkey=value,...\n")
    for e in sorted(entries):
        if e in seen:
            continue
        seen.add(e)
        fh.write("\t".join(e) + "\n")
print(f"{len(seen)} entries written to {os.path.normpath(out)}")
