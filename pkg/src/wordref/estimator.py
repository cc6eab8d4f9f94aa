"""Scikit-learn style front door: fit a dictionary on a corpus, transform
documents to containers, invert back to text."""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from wordref.codec import compress, decompress
from wordref.dictionary import build_from_corpus, load_manifest
from wordref.search import Match, build_plan, scan

__all__ = ["WordReferenceCompressor"]


def _as_documents(X) -> list[bytes]:
    """Validate an iterable of str/bytes documents into 8-bit byte strings."""
    if isinstance(X, (str, bytes)):
        raise TypeError("expected an iterable of documents, got a single document")
    docs = []
    for i, doc in enumerate(X):
        if isinstance(doc, str):
            try:
                doc = doc.encode("latin-1")
            except UnicodeEncodeError as exc:
                raise ValueError(
                    f"document {i} is not 8-bit extended-ASCII text: {exc}"
                ) from exc
        elif not isinstance(doc, (bytes, bytearray)):
            raise TypeError(f"document {i} is {type(doc).__name__}, expected str or bytes")
        docs.append(bytes(doc))
    return docs


class WordReferenceCompressor(TransformerMixin, BaseEstimator):
    """Word-referencing text compressor with an estimator interface.

    `fit` derives the reference dictionary from the training documents by
    frequency analysis; `transform` compresses documents to container bytes;
    `inverse_transform` restores them byte-exactly.
    """

    def __init__(
        self,
        common_size: int = 256,
        words_size: int = 49000,
        composites_size: int = 1000,
        composite_min_count: int = 4,
        use_composites: bool = True,
        use_aliases: bool = False,
    ):
        self.common_size = common_size
        self.words_size = words_size
        self.composites_size = composites_size
        self.composite_min_count = composite_min_count
        self.use_composites = use_composites
        self.use_aliases = use_aliases

    def fit(self, X, y=None):
        docs = _as_documents(X)
        self.manifest_bytes_ = build_from_corpus(
            docs,
            common_size=self.common_size,
            words_size=self.words_size,
            composites_size=self.composites_size,
            composite_min_count=self.composite_min_count,
        )
        self.dictionary_ = load_manifest(self.manifest_bytes_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "dictionary_"):
            raise NotFittedError(
                "This WordReferenceCompressor instance is not fitted yet; "
                "call fit with a training corpus first."
            )

    def transform(self, X) -> list[bytes]:
        self._check_fitted()
        return [
            compress(
                doc,
                self.dictionary_,
                parse2=self.use_composites,
                parse4=self.use_aliases,
            )
            for doc in _as_documents(X)
        ]

    def inverse_transform(self, X) -> list[bytes]:
        self._check_fitted()
        return [decompress(bytes(container), self.dictionary_) for container in X]

    def search(self, container: bytes, word: bytes | str) -> list[Match]:
        """Whole-word matches of `word` inside one transformed container."""
        self._check_fitted()
        matches, _ = scan(container, self.dictionary_, build_plan(word, self.dictionary_))
        return matches
