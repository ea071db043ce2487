"""The 54-item Divorce Predictors Scale question bank.

Item texts follow the published English wording of the scale (responses are
Likert 0..4). Indices are 1-based throughout the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass

QUESTION_TEXTS = (
    "When one of our apologies apologizes when our discussions go in a bad direction, the issue does not extend.",
    "I know we can ignore our differences, even if things get hard sometimes.",
    "When we need it, we can take our discussions with my wife from the beginning and correct it.",
    "When I argue with my wife, it will eventually work for me to contact him.",
    "The time I spent with my wife is special for us.",
    "We don't have time at home as partners.",
    "We are like two strangers who share the same environment at home rather than family.",
    "I enjoy our holidays with my wife.",
    "I enjoy traveling with my wife.",
    "My wife and most of our goals are common.",
    "I think that one day in the future, when I look back, I see that my wife and I are in harmony with each other.",
    "My wife and I have similar values in terms of personal freedom.",
    "My husband and I have similar entertainment.",
    "Most of our goals for people (children, friends, etc.) are the same.",
    "Our dreams of living with my wife are similar and harmonious.",
    "We're compatible with my wife about what love should be.",
    "We share the same views with my wife about being happy in your life.",
    "My wife and I have similar ideas about how marriage should be.",
    "My wife and I have similar ideas about how roles should be in marriage.",
    "My wife and I have similar values in trust.",
    "I know exactly what my wife likes.",
    "I know how my wife wants to be taken care of when she's sick.",
    "I know my wife's favorite food.",
    "I can tell you what kind of stress my wife is facing in her life.",
    "I have knowledge of my wife's inner world.",
    "I know my wife's basic concerns.",
    "I know what my wife's current sources of stress are.",
    "I know my wife's hopes and wishes.",
    "I know my wife very well.",
    "I know my wife's friends and their social relationships.",
    "I feel aggressive when I argue with my wife.",
    "When discussing with my wife, I usually use expressions such as are you always or are you never.",
    "I can use negative statements about my wife's personality during our discussions.",
    "I can use offensive expressions during our discussions.",
    "I can insult our discussions.",
    "I can be humiliating when we argue.",
    "My argument with my wife is not calm.",
    "I hate my wife's way of bringing it up.",
    "Fights often occur suddenly.",
    "We're just starting a fight before I know what's going on.",
    "When I talk to my wife about something, my calm suddenly breaks.",
    "When I argue with my wife, it only snaps in and I don't say a word.",
    "I'm mostly thirsty to calm the environment a little bit.",
    "Sometimes I think it's good for me to leave home for a while.",
    "I'd rather stay silent than argue with my wife.",
    "Even if I'm right in the argument, I'm thirsty not to upset the other side.",
    "When I argue with my wife, I remain silent because I am afraid of not being able to control my anger.",
    "I feel right in our discussions.",
    "I have nothing to do with what I've been accused of.",
    "I'm not actually the one who's guilty about what I'm accused of.",
    "I'm not the one who's wrong about problems at home.",
    "I wouldn't hesitate to tell her about my wife's inadequacy.",
    "When I discuss it, I remind her of my wife's inadequate issues.",
    "I'm not afraid to tell her about my wife's incompetence.",
)

QUESTION_COUNT = len(QUESTION_TEXTS)

SCALE_MIN = 0
SCALE_MAX = 4


@dataclass(frozen=True)
class CatalogEntry:
    index: int  # 1-based attribute index
    text: str


@dataclass(frozen=True)
class QuestionCatalog:
    entries: tuple[CatalogEntry, ...]

    def text(self, index: int) -> str:
        """Question text for a 1-based attribute index."""
        if not 1 <= index <= len(self.entries):
            raise IndexError(f"attribute index {index} outside 1..{len(self.entries)}")
        return self.entries[index - 1].text


def question_catalog() -> QuestionCatalog:
    """The embedded 54-entry questionnaire catalog."""
    return QuestionCatalog(
        entries=tuple(CatalogEntry(i + 1, t) for i, t in enumerate(QUESTION_TEXTS))
    )
