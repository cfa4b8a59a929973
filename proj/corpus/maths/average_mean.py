def mean(nums):
    if not nums:
        raise ValueError("List is empty")
    return sum(nums) / len(nums)


print(mean([3, 6, 9, 12, 15, 18, 21]))
print(mean([5, 10, 15, 20, 25, 30, 35]))
print(mean([1, 2, 3, 4, 5, 6, 7, 8]))
try:
    mean([])
except ValueError as e:
    print(e)
