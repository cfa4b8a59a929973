def jaccard_similarity(set_a, set_b, alternative_union=False):
    if isinstance(set_a, set) and isinstance(set_b, set):
        intersection_length = len(set_a.intersection(set_b))
        if alternative_union:
            union_length = len(set_a) + len(set_b)
        else:
            union_length = len(set_a.union(set_b))
        return intersection_length / union_length
    if isinstance(set_a, (list, tuple)) and isinstance(set_b, (list, tuple)):
        intersection = [element for element in set_a if element in set_b]
        if alternative_union:
            return len(intersection) / (len(set_a) + len(set_b))
        union = list(set_a) + [element for element in set_b if element not in set_a]
        return len(intersection) / len(union)
    return None


set_a = {"a", "b", "c", "d", "e"}
set_b = {"c", "d", "e", "f", "h", "i"}
print(jaccard_similarity(set_a, set_b))
print(jaccard_similarity(set_a, set_b, True))
print(jaccard_similarity(["a", "b", "c"], ("c", "d", "e")))
print(jaccard_similarity(set_a, ["x"]))
