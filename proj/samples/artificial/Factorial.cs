using System;

class Factorial
{
    static long Fact(int n)
    {
        return n <= 1 ? 1 : n * Fact(n - 1);
    }

    static void Main()
    {
        /* print 10! */
        Console.WriteLine("10! = " + Fact(10));
    }
}
