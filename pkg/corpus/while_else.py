n = 17
divisor = 2
while divisor * divisor <= n:
    if n % divisor == 0:
        print("composite", divisor)
        break
    divisor += 1
else:
    print("prime", n)
