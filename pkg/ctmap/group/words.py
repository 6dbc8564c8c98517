# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
"""
Free-group words as tuples of non-zero integers: ``i`` is the i-th generator
(1-based) and ``-i`` its inverse.  Printed with ``a, b, c, ...`` for the
generators, upper case for inverses and ``1`` for the empty word.
"""
from __future__ import absolute_import
from __future__ import unicode_literals

import string

from ctmap.const import DEFAULT_AUTOMORPHISM_SEARCH
from ctmap.error import NotAnAutomorphism
from ctmap.error import UnknownModel
from ctmap.logger import logger

IDENTITY = ()
LETTERS = string.ascii_lowercase


def reduce_word(word):
    stack = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert(word):
    return tuple(-x for x in reversed(word))


def multiply(*words):
    joined = []
    for w in words:
        joined.extend(w)
    return reduce_word(joined)


def generators(rank):
    """Generators and their inverses, in the order a, A, b, B, ..."""
    out = []
    for i in range(1, rank + 1):
        out.append((i,))
        out.append((-i,))
    return out


def format_word(word):
    if not word:
        return "1"
    return "".join(
        LETTERS[x - 1] if x > 0 else LETTERS[-x - 1].upper() for x in word
    )


def parse_word(text, rank=None):
    text = text.strip()
    if text in ("", "1"):
        return IDENTITY

    word = []
    for ch in text:
        lower = ch.lower()
        if lower not in LETTERS:
            raise UnknownModel(text)
        i = LETTERS.index(lower) + 1
        if rank is not None and i > rank:
            raise UnknownModel(text)
        word.append(i if ch.islower() else -i)

    return reduce_word(word)


def reduced_words(rank, max_length):
    """All reduced words up to ``max_length``, shortest first."""
    layer = [IDENTITY]
    yield IDENTITY
    for _ in range(max_length):
        following = []
        for w in layer:
            for g in generators(rank):
                x = g[0]
                if w and w[-1] == -x:
                    continue
                following.append(w + (x,))
        for w in following:
            yield w
        layer = following


class Automorphism(object):
    """An endomorphism of the free group given by generator images."""

    def __init__(self, rank, images, spec=None):
        if len(images) != rank:
            raise UnknownModel(spec or str(images))
        self._rank = rank
        self._images = tuple(reduce_word(w) for w in images)
        self._spec = spec
        self._inverse = None

    @property
    def rank(self):
        return self._rank

    @property
    def images(self):
        return self._images

    def __call__(self, word):
        out = []
        for x in word:
            image = self._images[abs(x) - 1]
            out.extend(image if x > 0 else invert(image))
        return reduce_word(out)

    def power(self, k, word):
        """Apply the k-th power, negative ``k`` through the inverse."""
        step = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            word = step(word)
        return word

    def inverse(self, search=DEFAULT_AUTOMORPHISM_SEARCH):
        if self._inverse is not None:
            return self._inverse

        wanted = {(i,): None for i in range(1, self._rank + 1)}
        for w in reduced_words(self._rank, search):
            image = self(w)
            if image in wanted and wanted[image] is None:
                wanted[image] = w
                if all(v is not None for v in wanted.values()):
                    break

        if any(v is None for v in wanted.values()):
            raise NotAnAutomorphism(str(self))

        images = [wanted[(i,)] for i in range(1, self._rank + 1)]
        inverse = Automorphism(self._rank, images)

        for i in range(1, self._rank + 1):
            if self(inverse((i,))) != (i,):
                raise NotAnAutomorphism(str(self))

        logger.debug("Inverse of %s is %s", self, inverse)
        inverse._inverse = self
        self._inverse = inverse
        return inverse

    def __str__(self):
        if self._spec:
            return self._spec
        return ",".join(
            "%s->%s" % (LETTERS[i], format_word(w))
            for i, w in enumerate(self._images)
        )

    def __repr__(self):
        return "Automorphism(%s)" % self


def parse_automorphism(spec, rank=None):
    """Parse ``a->ab,b->a``; generators without a rule are fixed."""
    rules = {}
    for part in spec.split(','):
        part = part.strip()
        if '->' not in part:
            raise UnknownModel(spec)
        src, dst = part.split('->', 1)
        src = src.strip()
        if len(src) != 1 or src not in LETTERS:
            raise UnknownModel(spec)
        rules[LETTERS.index(src) + 1] = dst.strip()

    if rank is None:
        rank = max(rules)
        for dst in rules.values():
            for ch in dst:
                if ch.lower() in LETTERS:
                    rank = max(rank, LETTERS.index(ch.lower()) + 1)

    images = []
    for i in range(1, rank + 1):
        images.append(parse_word(rules[i], rank) if i in rules else (i,))

    return Automorphism(rank, images, spec=spec)
