using System;

class Fibonacci
{
    // Prints the first n Fibonacci numbers.
    static void Main()
    {
        int a = 0, b = 1, n = 10;
        for (int i = 0; i < n; i++)
        {
            Console.WriteLine(a);
            int t = a + b;
            a = b;
            b = t;
        }
    }
}
