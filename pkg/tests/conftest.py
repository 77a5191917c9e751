import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from ltgec.corpus import TextSample

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


# Realistic Lithuanian prose used across the suite: diacritics, „...“ quotes,
# abbreviations, numbers and ordinary punctuation.
PARAGRAPHS = (
    "Vilniaus universiteto mokslininkai pranešė, kad naujasis tyrimų centras "
    "pradės veikti kitų metų pavasarį. Centro laboratorijose dirbs daugiau "
    "kaip du šimtai tyrėjų, kurie nagrinės kalbos technologijų, dirbtinio "
    "intelekto ir skaitmeninės humanitarikos klausimus.",
    "Lietuvos nacionalinė biblioteka paskelbė skaitmeninimo programą, pagal "
    "kurią senieji rankraščiai taps prieinami visiems skaitytojams internetu. "
    "Programos vadovė pabrėžė, kad „kultūros paveldas privalo būti pasiekiamas "
    "kiekvienam“, todėl dokumentai bus skelbiami nemokamai.",
    "Kauno technologijos universiteto studentai sukūrė programėlę, padedančią "
    "mokytis lietuvių kalbos rašybos. Programėlė atpažįsta dažniausias "
    "klaidas: praleistas nosines, supainiotas balses ir trūkstamus skyrybos "
    "ženklus.",
    "Žemaitijos nacionaliniame parke šį rudenį apsilankė rekordinis lankytojų "
    "skaičius. Parko direkcija skaičiuoja, kad per tris mėnesius takais "
    "praėjo daugiau nei šimtas tūkstančių žmonių, o populiariausias maršrutas "
    "vedė palei Platelių ežerą.",
    "Vyriausybė patvirtino švietimo reformos gaires, numatančias atnaujinti "
    "mokymo programas ir sustiprinti mokytojų rengimą. Ministerijos "
    "duomenimis, pokyčiai palies beveik tris šimtus mokyklų visoje šalyje.",
    "Iššūkis atrodė didžiulis: pusseserė užsimerkė, paukščiai giedojo, o mes "
    "turėjome dirbti, bėgti atgal, lipdavome per tvorą, megzti ryšius ir "
    "atlikti visas užduotis iki vakaro.",
    "Jis gimė 1918 m. vasario 16 d. Vilniuje, vėliau dirbo archyvuose, "
    "tyrinėjo dokumentus apie A. Smetoną, J. Basanavičių ir t. t. bei rašė "
    "straipsnius apie nepriklausomybės atkūrimą.",
)

# Long-word-heavy prose keeps the space fraction low, which matters when a
# test measures how often keyboard-slip errors land on spaces.
LONG_WORD_TEXT = (
    "Nepriklausomybės atkūrimo trisdešimtmečio minėjimo renginiuose "
    "dalyvavusieji universitetų bendruomenių atstovai diskutavo apie "
    "tarpinstitucinio bendradarbiavimo perspektyvas, skaitmeninimo "
    "strategijas, humanitarinių tyrimų finansavimą, studentų tarptautiškumo "
    "skatinimą, administracinės naštos mažinimą, kvalifikacijos tobulinimo "
    "programas, infrastruktūros modernizavimą, dokumentacijos "
    "standartizavimą, specializacijos galimybes, sertifikavimo procedūras, "
    "rekonstrukcijos projektus, charakteristikas, organizacijas, "
    "technologijas, architektūras, literatūras, matematikas, filosofijas, "
    "psichologijas, bibliotekininkystę, laboratorijas, konferencijas."
)

_WORD_POOL = tuple(sorted({
    word.strip(".,:„“()")
    for paragraph in PARAGRAPHS
    for word in paragraph.split()
    if word.strip(".,:„“()")
}))


def make_corpus(n: int, seed: int = 0, words_per: int = 18) -> list[TextSample]:
    """Distinct pseudo-sentences assembled from the fixture vocabulary."""
    rng = np.random.default_rng(seed)
    samples = []
    pool = np.array(_WORD_POOL)
    for k in range(n):
        words = list(rng.choice(pool, size=words_per))
        sentence = " ".join(words)
        sentence = sentence[0].upper() + sentence[1:] + "."
        samples.append(TextSample(f"s{k}", sentence))
    return samples


@pytest.fixture
def paragraphs():
    return PARAGRAPHS


@pytest.fixture
def long_word_text():
    return LONG_WORD_TEXT


@pytest.fixture
def corpus_factory():
    return make_corpus
