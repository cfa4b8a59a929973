def solution(power=1000):
    num = 2**power
    string_num = str(num)
    list_num = list(string_num)
    sum_of_num = 0
    for i in list_num:
        sum_of_num += int(i)
    return sum_of_num


for power in (1000, 50, 20, 15):
    print(power, solution(power))
