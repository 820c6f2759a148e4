"""
Dict-based trie keyed on suffixes read last scalar first.
"""
from typing import Dict, Generic, Iterator, List, Optional, Tuple, TypeVar

T = TypeVar('T')


class ReversedSuffixTrie(Generic[T]):
    """ A read-only trie over reversed keys.

        Walking a word from its last scalar towards its first visits every
        stored key that is a suffix of the word, shortest first, in time
        proportional to the longest stored key.
    """

    def __init__(self, data: Optional[List[Tuple[str, T]]] = None) -> None:
        self._tree: Dict[str, 'ReversedSuffixTrie[T]'] = {}
        self._value: Optional[T] = None
        self._size = 0

        if data:
            for key, value in data:
                self._add(key, value)

    def _add(self, key: str, value: T) -> None:
        node = self
        for scalar in reversed(key):
            child = node._tree.get(scalar)
            if child is None:
                child = ReversedSuffixTrie()
                node._tree[scalar] = child
            node = child
        if node._value is None:
            self._size += 1
        node._value = value

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[T]:
        """ Yield every stored value (depth-first, unordered). """
        stack: List['ReversedSuffixTrie[T]'] = [self]
        while stack:
            node = stack.pop()
            if node._value is not None:
                yield node._value
            stack.extend(node._tree.values())

    def suffixes_of(self, word: str, max_length: Optional[int] = None) -> List[Tuple[T, int]]:
        """ Return every stored key that is a suffix of 'word'.

            The result holds (value, key length) pairs, longest key first.
            Keys longer than 'max_length' are not considered.
        """
        found: List[Tuple[T, int]] = []
        node = self
        limit = len(word) if max_length is None else min(max_length, len(word))

        for depth in range(1, limit + 1):
            node = node._tree.get(word[-depth])
            if node is None:
                break
            if node._value is not None:
                found.append((node._value, depth))

        found.reverse()
        return found
