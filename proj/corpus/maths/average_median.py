def median(nums):
    sorted_list = sorted(nums)
    length = len(sorted_list)
    mid_index = length >> 1
    if length % 2 == 0:
        return (sorted_list[mid_index] + sorted_list[mid_index - 1]) / 2
    return sorted_list[mid_index]


print(median([0]))
print(median([4, 1, 3, 2]))
print(median([2, 70, 6, 50, 20, 8, 4]))
