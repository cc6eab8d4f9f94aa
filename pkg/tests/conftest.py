import pytest

from wordref.dictionary import load_manifest

SMALL_MANIFEST = b"""[common]
the
in
of
and
to
was
is
it
that
for
[words]
cat
dog
house
zebra
time
day
word
words
end
New
[composites]
in the
in the house
of the
[contractions_nt]
isn't
don't
[contractions_s]
he's
it's
[contractions_m]
I'm
[contractions_ll]
we'll
"""


@pytest.fixture(scope="session")
def small_dict():
    return load_manifest(SMALL_MANIFEST)
