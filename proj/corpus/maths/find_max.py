def find_max_iterative(nums):
    if len(nums) == 0:
        raise ValueError("find_max_iterative() arg is an empty sequence")
    max_num = nums[0]
    for x in nums:
        if x > max_num:
            max_num = x
    return max_num


def find_max_recursive(nums, left, right):
    if left == right:
        return nums[left]
    mid = (left + right) >> 1
    left_max = find_max_recursive(nums, left, mid)
    right_max = find_max_recursive(nums, mid + 1, right)
    return left_max if left_max >= right_max else right_max


for nums in ([3, 2, 1], [-3, -2, -1], [3, -3, 0], [3.0, 3.1, 2.9], [2, 4, 9, 7, 19, 94, 5]):
    print(find_max_iterative(nums), find_max_recursive(nums, 0, len(nums) - 1))
