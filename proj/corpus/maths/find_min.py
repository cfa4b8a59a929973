def find_min_iterative(nums):
    if len(nums) == 0:
        raise ValueError("find_min_iterative() arg is an empty sequence")
    min_num = nums[0]
    for num in nums:
        min_num = min(min_num, num)
    return min_num


for nums in ([3, 2, 1], [-3, -2, -1], [3, -3, 0], [3.0, 3.1, 2.9], [-1, 0, 1]):
    print(find_min_iterative(nums))
try:
    find_min_iterative([])
except ValueError as error:
    print(error)
